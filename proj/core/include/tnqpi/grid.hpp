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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace tnqpi {

/// One axis of a box domain, discretized with `qubits` qubits.
struct DimensionSpec {
  double lower = 0.0;
  double upper = 1.0;
  unsigned qubits = 1;

  bool operator==(const DimensionSpec&) const = default;
};

/// 1-based lattice index per dimension.
using MultiIndex = std::vector<std::uint64_t>;
using Point = std::vector<double>;

/// Uniform qubit lattice over a box. The lattice along one axis is
/// x_k = a + (k - 1) (b - a) / 2^n for k = 1..2^n. Multi-dimensional basis
/// states concatenate per-dimension qubit blocks, first dimension in the
/// most significant bits.
class Grid {
 public:
  const std::vector<DimensionSpec>& dims() const { return dims_; }
  std::size_t num_dims() const { return dims_.size(); }
  unsigned total_qubits() const { return total_qubits_; }
  std::uint64_t num_points() const { return std::uint64_t{1} << total_qubits_; }
  std::uint64_t points_along(std::size_t dim) const {
    return std::uint64_t{1} << dims_[dim].qubits;
  }
  double spacing(std::size_t dim) const;

  bool operator==(const Grid&) const = default;

 private:
  friend Grid make_grid(std::vector<DimensionSpec> dims);
  std::vector<DimensionSpec> dims_;
  unsigned total_qubits_ = 0;
};

/// Throws kInvalidDomain if a >= b, kZeroQubitDimension for n = 0 and
/// kSizeLimit when the total exceeds 62 qubits.
Grid make_grid(std::vector<DimensionSpec> dims);

Point index_to_point(const Grid& grid, std::span<const std::uint64_t> k);
/// Nearest lattice index per dimension, clamped into the lattice.
MultiIndex point_to_index(const Grid& grid, std::span<const double> x);

/// 0-based computational basis state for a multi-index and back.
std::uint64_t multi_index_to_basis(const Grid& grid,
                                   std::span<const std::uint64_t> k);
MultiIndex basis_to_multi_index(const Grid& grid, std::uint64_t basis);
Point basis_to_point(const Grid& grid, std::uint64_t basis);

enum class Direction { kMaximize, kMinimize };

using Objective = std::function<double(std::span<const double>)>;

/// Affine pre-processing that turns an objective into a normalized
/// maximization target g with 0 <= g <= 1 on the sampled points.
struct ObjectiveSpec {
  Objective evaluator;
  Direction direction = Direction::kMaximize;
  double shift = 0.0;  // C
  double scale = 1.0;  // s
  bool degenerate = false;

  struct Value {
    double value;
    bool clipped;
  };

  /// g = (C - f) / s when minimizing, f / s when maximizing, clipped to [0, 1].
  Value normalize(double raw) const;
  double operator()(std::span<const double> x) const {
    return normalize(evaluator(x)).value;
  }
};

/// Fixes shift and scale from `samples` so that the sampled maximum of g is 1.
/// A constant objective is flagged degenerate and maps to g = 0.
ObjectiveSpec preprocess_objective(ObjectiveSpec spec,
                                   const std::vector<Point>& samples);

/// Grid plus objective normalization, as stored in run directories.
struct DiscretizationConfig {
  Grid grid;
  Direction direction = Direction::kMaximize;
  double shift = 0.0;
  double scale = 1.0;
  bool degenerate = false;
};

std::string to_config_text(const DiscretizationConfig& config);
DiscretizationConfig parse_config_text(const std::string& text);

}  // namespace tnqpi
