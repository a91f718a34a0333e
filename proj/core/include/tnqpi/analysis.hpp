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

#include "tnqpi/grid.hpp"
#include "tnqpi/tensor_train.hpp"

namespace tnqpi {

using ScalarFunction = std::function<double(double)>;

inline constexpr std::size_t kDefaultQuadraturePanels = 100000;
inline constexpr std::size_t kRankGrowthLimit = 4096;

/// (1/2^n) sum_k g^{2p}(x_k) over every lattice point of the grid.
double success_probability_sum(const Grid& grid, const Objective& g, std::size_t p);

struct SuccessProbabilityIntegral {
  /// (1/(b-a)) int_a^b g^{2p} by composite trapezoid.
  double mean_integral = 0.0;
  /// Lattice-consistent value for x_k = a + (k-1)(b-a)/2^n:
  /// mean_integral + (g^{2p}(a) - g^{2p}(b)) / 2^{n+1}.
  double corrected = 0.0;
  /// mean_integral - (g^{2p}(a) + g^{2p}(b)) / 2^{n+1}.
  double symmetric = 0.0;
  /// mean_integral - (g^{2p}(a) + g^{2p}(b)) / 2, no 2^-n factor.
  double literal = 0.0;
};

SuccessProbabilityIntegral success_probability_integral(const ScalarFunction& g, double a,
                                                        double b, std::size_t p, std::size_t n,
                                                        std::size_t panels = kDefaultQuadraturePanels);

struct SuccessProbabilityResult {
  std::size_t n = 0;
  std::size_t p = 0;
  double exact = 0.0;
  double integral = 0.0;
  double literal_integral = 0.0;
  double discrepancy = 0.0;
};

SuccessProbabilityResult success_probability(const ScalarFunction& g, double a, double b,
                                             std::size_t p, std::size_t n);

struct ScanTable {
  std::vector<SuccessProbabilityResult> rows;
  /// max |exact_i - exact_j| over all pairs.
  double max_deviation = 0.0;
};

ScanTable n_independence_scan(const ScalarFunction& g, double a, double b, std::size_t p,
                              const std::vector<std::size_t>& qubits);

struct RankGrowthRow {
  std::size_t step = 0;
  std::size_t formal_rank = 0;
  std::size_t predicted_rank = 0;
  std::size_t dense_cap = 0;
  /// Max rank after lossless (tol = 0) rounding.
  std::size_t rounded_rank = 0;
};

/// Max ranks of the untruncated classical power iteration against the
/// r_H^j r_f prediction and the 2^{floor(n/2)} cap.
std::vector<RankGrowthRow> rank_growth_report(const TTOperator& h, const TTVector& f0,
                                              std::size_t p);

/// Spearman correlation with average ranks for ties.
double spearman_correlation(const std::vector<double>& x, const std::vector<double>& y);

struct TimingRow {
  std::size_t ansatz_rank = 0;
  double seconds = 0.0;
};

struct TimingTable {
  std::size_t num_qubits = 0;
  std::vector<TimingRow> rows;
  /// Least-squares slope of log(seconds) against log(R).
  double log_log_slope = 0.0;
};

/// Wall time of one cost + gradient evaluation per ansatz rank, best of
/// `repeats` runs.
TimingTable time_cost_evaluation(std::size_t n, const std::vector<std::size_t>& ranks,
                                 std::size_t repeats, std::uint64_t seed);

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace tnqpi
