// Copyright 2026 The tnqpi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tnqpi/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>
#include "tnqpi/error.hpp"

namespace tnqpi {

namespace {

constexpr unsigned kMaxTotalQubits = 62;

void check_arity(const Grid& grid, std::size_t size) {
  if (size != grid.num_dims()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(grid.num_dims()) +
                    " coordinates, got " + std::to_string(size));
  }
}

}  // namespace

double Grid::spacing(std::size_t dim) const {
  const auto& d = dims_.at(dim);
  return (d.upper - d.lower) / static_cast<double>(points_along(dim));
}

Grid make_grid(std::vector<DimensionSpec> dims) {
  if (dims.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "grid needs at least one dimension");
  }
  unsigned total = 0;
  for (const auto& d : dims) {
    if (!(d.lower < d.upper)) {
      throw Error(ErrorCode::kInvalidDomain,
                  "lower bound must be below upper bound");
    }
    if (d.qubits == 0) {
      throw Error(ErrorCode::kZeroQubitDimension,
                  "every dimension needs at least one qubit");
    }
    total += d.qubits;
  }
  if (total > kMaxTotalQubits) {
    throw Error(ErrorCode::kSizeLimit, "grid exceeds 62 qubits");
  }
  Grid grid;
  grid.dims_ = std::move(dims);
  grid.total_qubits_ = total;
  return grid;
}

Point index_to_point(const Grid& grid, std::span<const std::uint64_t> k) {
  check_arity(grid, k.size());
  Point x(k.size());
  for (std::size_t d = 0; d < k.size(); ++d) {
    if (k[d] < 1 || k[d] > grid.points_along(d)) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "lattice index " + std::to_string(k[d]) + " out of range");
    }
    x[d] = grid.dims()[d].lower +
           static_cast<double>(k[d] - 1) * grid.spacing(d);
  }
  return x;
}

MultiIndex point_to_index(const Grid& grid, std::span<const double> x) {
  check_arity(grid, x.size());
  MultiIndex k(x.size());
  for (std::size_t d = 0; d < x.size(); ++d) {
    const double cell = std::round((x[d] - grid.dims()[d].lower) / grid.spacing(d));
    const double top = static_cast<double>(grid.points_along(d) - 1);
    k[d] = static_cast<std::uint64_t>(std::clamp(cell, 0.0, top)) + 1;
  }
  return k;
}

std::uint64_t multi_index_to_basis(const Grid& grid,
                                   std::span<const std::uint64_t> k) {
  check_arity(grid, k.size());
  std::uint64_t basis = 0;
  for (std::size_t d = 0; d < k.size(); ++d) {
    if (k[d] < 1 || k[d] > grid.points_along(d)) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "lattice index " + std::to_string(k[d]) + " out of range");
    }
    basis = (basis << grid.dims()[d].qubits) | (k[d] - 1);
  }
  return basis;
}

MultiIndex basis_to_multi_index(const Grid& grid, std::uint64_t basis) {
  if (basis >= grid.num_points()) {
    throw Error(ErrorCode::kIndexOutOfRange, "basis state out of range");
  }
  MultiIndex k(grid.num_dims());
  for (std::size_t d = grid.num_dims(); d-- > 0;) {
    const unsigned q = grid.dims()[d].qubits;
    k[d] = (basis & ((std::uint64_t{1} << q) - 1)) + 1;
    basis >>= q;
  }
  return k;
}

Point basis_to_point(const Grid& grid, std::uint64_t basis) {
  const auto k = basis_to_multi_index(grid, basis);
  return index_to_point(grid, k);
}

ObjectiveSpec::Value ObjectiveSpec::normalize(double raw) const {
  const double g = direction == Direction::kMinimize ? (shift - raw) / scale
                                                     : raw / scale;
  if (g > 1.0) return {1.0, true};
  if (g < 0.0) return {0.0, true};
  return {g, false};
}

ObjectiveSpec preprocess_objective(ObjectiveSpec spec,
                                   const std::vector<Point>& samples) {
  if (samples.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "preprocessing needs samples");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& x : samples) {
    const double f = spec.evaluator(x);
    if (!std::isfinite(f)) {
      throw Error(ErrorCode::kNonFiniteSample, "objective returned a non-finite value");
    }
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  spec.degenerate = false;
  if (spec.direction == Direction::kMinimize) {
    spec.shift = hi;
    spec.scale = hi - lo;
  } else {
    spec.shift = 0.0;
    spec.scale = hi;
  }
  if (!(spec.scale > 0.0) || lo == hi) {
    spec.degenerate = true;
    spec.scale = 1.0;
    if (spec.direction == Direction::kMaximize) spec.scale = hi > 0.0 ? hi : 1.0;
  }
  return spec;
}

std::string to_config_text(const DiscretizationConfig& config) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  auto& dims = j["dims"] = nlohmann::ordered_json::array();
  for (const auto& d : config.grid.dims()) {
    dims.push_back({{"domain", {d.lower, d.upper}}, {"qubits", d.qubits}});
  }
  j["direction"] =
      config.direction == Direction::kMinimize ? "minimize" : "maximize";
  j["shift"] = config.shift;
  j["scale"] = config.scale;
  j["degenerate"] = config.degenerate;
  return j.dump(2) + "\n";
}

DiscretizationConfig parse_config_text(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.value("version", 0) != 1) {
      throw Error(ErrorCode::kFormat, "unsupported discretization config version");
    }
    std::vector<DimensionSpec> dims;
    for (const auto& d : j.at("dims")) {
      const auto& domain = d.at("domain");
      dims.push_back({domain.at(0).get<double>(), domain.at(1).get<double>(),
                      d.at("qubits").get<unsigned>()});
    }
    DiscretizationConfig config{make_grid(std::move(dims))};
    const auto direction = j.value("direction", std::string("maximize"));
    if (direction != "maximize" && direction != "minimize") {
      throw Error(ErrorCode::kFormat, "direction must be maximize or minimize");
    }
    config.direction =
        direction == "minimize" ? Direction::kMinimize : Direction::kMaximize;
    config.shift = j.value("shift", 0.0);
    config.scale = j.value("scale", 1.0);
    config.degenerate = j.value("degenerate", false);
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("bad discretization config: ") + e.what());
  }
}

}  // namespace tnqpi
