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
#include <vector>

#include <Eigen/Dense>

#include "tnqpi/tensor_train.hpp"

namespace tnqpi {

/// Row indices of a tall, full-column-rank matrix whose square submatrix is
/// quasi-dominant: every entry of M * M[rows]^-1 has magnitude <= 1 + tol.
/// Entry j of the result is the row that pivots column j.
std::vector<Eigen::Index> maxvol(const Eigen::MatrixXd& m, double tol = 1e-2,
                                 std::size_t max_iters = 1000);

struct CrossConfig {
  std::size_t max_rank = 2;
  /// One sweep is a left-to-right pivot pass followed by a right-to-left pass.
  std::size_t n_sweeps = 4;
  std::size_t validation_sample_count = 256;
  std::uint64_t seed = 0;
  /// Stop once the validation error improves by less than this between sweeps.
  double tol = 1e-10;
};

/// Black box over the computational basis of n qubits.
using IndexFunction = std::function<double(std::uint64_t basis)>;

struct CrossTraceRow {
  std::size_t sweep;
  std::uint64_t evaluations;
  double validation_error;
};

struct CrossResult {
  TTVector tt;
  double validation_error = 0.0;
  /// Distinct black-box evaluations, validation samples included.
  std::uint64_t evaluations = 0;
  std::size_t sweeps = 0;
  bool converged = false;
  std::vector<CrossTraceRow> trace;
  /// Fiber points of the final pass; the TT interpolates g there.
  std::vector<std::uint64_t> interpolation_points;
};

/// Upper bound on black-box evaluations for tt_cross(g, n, cfg).
std::uint64_t cross_evaluation_budget(std::size_t n, const CrossConfig& cfg);

/// Fixed-rank TT-cross interpolation with maxvol pivoting. Initial right index
/// sets are drawn uniformly at random from `cfg.seed`; bond ranks never exceed
/// cfg.max_rank and shrink where a fiber matrix is numerically rank deficient.
/// Throws kNonFiniteSample if g returns NaN or infinity.
CrossResult tt_cross(const IndexFunction& g, std::size_t n, const CrossConfig& cfg);

}  // namespace tnqpi
