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
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tnqpi/grid.hpp"
#include "tnqpi/tensor_train.hpp"

namespace tnqpi {

double sine(double x);
/// Two-dimensional Ackley function; global minimum f(0, 0) = 0.
double ackley(double x, double y);
/// (1 - x)^2 + 100 (y - x^2)^2; global minimum f(1, 1) = 0.
double rosenbrock(double x, double y);

struct Benchmark {
  std::string name;
  std::size_t dimension = 1;
  std::vector<DimensionSpec> domain;  // qubits hold the default resolution
  Objective evaluator;
  Point optimum;
  double optimum_value = 0.0;
  Direction direction = Direction::kMaximize;
  std::size_t default_rank = 2;
};

const std::vector<Benchmark>& benchmark_registry();
/// Throws kInvalidArgument for unknown names.
const Benchmark& find_benchmark(std::string_view name);

/// Exact rank-2 MPS of sin(x_k) on a one-dimensional grid, built from
/// rotations so that every core is an isometry.
TTVector sine_mps(const Grid& grid);

/// Objective given as a table of lattice values.
class TabulatedObjective {
 public:
  TabulatedObjective(Grid grid, std::unordered_map<std::uint64_t, double> values);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  bool contains(std::uint64_t basis) const { return values_.contains(basis); }
  /// Throws kIndexOutOfRange when the table has no entry for `basis`.
  double at_basis(std::uint64_t basis) const;
  /// Value at the lattice point nearest to x.
  double operator()(std::span<const double> x) const;

 private:
  Grid grid_;
  std::unordered_map<std::uint64_t, double> values_;
};

/// CSV with columns k1..kd,value (1-based lattice indices); '#' lines and a
/// header row are skipped.
TabulatedObjective parse_tabulated_objective(const std::string& csv, const Grid& grid);

}  // namespace tnqpi
