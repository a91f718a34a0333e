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

#include "tnqpi/benchmark_functions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tnqpi/error.hpp"

namespace tnqpi {

double sine(double x) { return std::sin(x); }

double ackley(double x, double y) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  return -20.0 * std::exp(-0.2 * std::sqrt(0.5 * (x * x + y * y))) -
         std::exp(0.5 * (std::cos(kTwoPi * x) + std::cos(kTwoPi * y))) + 20.0 +
         std::numbers::e;
}

double rosenbrock(double x, double y) {
  const double a = 1.0 - x;
  const double b = y - x * x;
  return a * a + 100.0 * b * b;
}

const std::vector<Benchmark>& benchmark_registry() {
  static const std::vector<Benchmark> registry = [] {
    std::vector<Benchmark> r;
    r.push_back({"sine", 1, {{0.0, std::numbers::pi, 8}},
                 [](std::span<const double> p) { return sine(p[0]); },
                 {std::numbers::pi / 2}, 1.0, Direction::kMaximize, 2});
    r.push_back({"ackley", 2, {{-5.0, 5.0, 5}, {-5.0, 5.0, 5}},
                 [](std::span<const double> p) { return ackley(p[0], p[1]); },
                 {0.0, 0.0}, 0.0, Direction::kMinimize, 6});
    r.push_back({"rosenbrock", 2, {{-2.5, 2.5, 5}, {-2.5, 2.5, 5}},
                 [](std::span<const double> p) { return rosenbrock(p[0], p[1]); },
                 {1.0, 1.0}, 0.0, Direction::kMinimize, 16});
    return r;
  }();
  return registry;
}

const Benchmark& find_benchmark(std::string_view name) {
  for (const auto& b : benchmark_registry()) {
    if (b.name == name) return b;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown benchmark: " + std::string(name));
}

TTVector sine_mps(const Grid& grid) {
  if (grid.num_dims() != 1) {
    throw Error(ErrorCode::kDimensionMismatch, "sine_mps needs a one-dimensional grid");
  }
  const std::size_t n = grid.total_qubits();
  const double a = grid.dims()[0].lower;
  const double h = grid.spacing(0);
  auto angle = [&](std::size_t j, int bit) {
    return bit * h * std::ldexp(1.0, static_cast<int>(n - 1 - j));
  };
  std::vector<Core3<double>> cores;
  if (n == 1) {
    Core3<double> c(1, 1);
    for (int s = 0; s < 2; ++s) c(0, s, 0) = std::sin(a + angle(0, s));
    cores.push_back(c);
    return TTVector(std::move(cores));
  }
  // Row vector (cos phi, sin phi) rotated site by site; the last core reads sin.
  Core3<double> first(1, 2);
  for (int s = 0; s < 2; ++s) {
    first(0, s, 0) = std::cos(a + angle(0, s));
    first(0, s, 1) = std::sin(a + angle(0, s));
  }
  cores.push_back(first);
  for (std::size_t j = 1; j + 1 < n; ++j) {
    Core3<double> c(2, 2);
    for (int s = 0; s < 2; ++s) {
      const double co = std::cos(angle(j, s));
      const double si = std::sin(angle(j, s));
      c(0, s, 0) = co;
      c(0, s, 1) = si;
      c(1, s, 0) = -si;
      c(1, s, 1) = co;
    }
    cores.push_back(c);
  }
  Core3<double> last(2, 1);
  for (int s = 0; s < 2; ++s) {
    last(0, s, 0) = std::sin(angle(n - 1, s));
    last(1, s, 0) = std::cos(angle(n - 1, s));
  }
  cores.push_back(last);
  return TTVector(std::move(cores));
}

TabulatedObjective::TabulatedObjective(Grid grid,
                                       std::unordered_map<std::uint64_t, double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {}

double TabulatedObjective::at_basis(std::uint64_t basis) const {
  const auto it = values_.find(basis);
  if (it == values_.end()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "tabulated objective has no value for basis state " + std::to_string(basis));
  }
  return it->second;
}

double TabulatedObjective::operator()(std::span<const double> x) const {
  const auto k = point_to_index(grid_, x);
  return at_basis(multi_index_to_basis(grid_, k));
}

TabulatedObjective parse_tabulated_objective(const std::string& csv, const Grid& grid) {
  std::unordered_map<std::uint64_t, double> values;
  std::istringstream in(csv);
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream fs(line);
    std::string field;
    while (std::getline(fs, field, ',')) fields.push_back(field);
    if (fields.size() != grid.num_dims() + 1) {
      throw Error(ErrorCode::kFormat, "line " + std::to_string(line_no) + ": expected " +
                                          std::to_string(grid.num_dims() + 1) + " columns");
    }
    MultiIndex k;
    double value = 0.0;
    try {
      for (std::size_t d = 0; d < grid.num_dims(); ++d) k.push_back(std::stoull(fields[d]));
      value = std::stod(fields.back());
    } catch (const std::exception&) {
      if (values.empty() && !header_seen) {
        header_seen = true;
        continue;
      }
      throw Error(ErrorCode::kFormat, "line " + std::to_string(line_no) + ": not numeric");
    }
    values[multi_index_to_basis(grid, k)] = value;
  }
  return TabulatedObjective(grid, std::move(values));
}

}  // namespace tnqpi
