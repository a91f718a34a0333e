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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tnqpi/analysis.hpp"
#include "tnqpi/benchmark_functions.hpp"
#include "tnqpi/error.hpp"
#include "tnqpi/statevector.hpp"
#include "tnqpi/unitary_mpo.hpp"

namespace tnqpi {
namespace {

using std::numbers::pi;

const ScalarFunction kSine = [](double x) { return std::sin(x); };
const ScalarFunction kOne = [](double) { return 1.0; };
const ScalarFunction kLinear = [](double x) { return x; };

Objective lift(ScalarFunction g) {
  return [g](std::span<const double> x) { return g(x[0]); };
}

TEST(SuccessSum, ConstantIsOne) {
  const Grid grid = make_grid({{0.0, 1.0, 6}});
  for (std::size_t p : {1, 5, 40}) EXPECT_DOUBLE_EQ(success_probability_sum(grid, lift(kOne), p), 1.0);
}

TEST(SuccessSum, SineHalf) {
  const Grid grid = make_grid({{0.0, pi, 10}});
  EXPECT_NEAR(success_probability_sum(grid, lift(kSine), 1), 0.5, 1e-3);
}

TEST(SuccessSum, MatchesSimulator) {
  for (unsigned n = 2; n <= 6; ++n) {
    const Grid grid = make_grid({{0.0, pi, n}});
    const auto u = unitary_completion(diag_mpo_from_mps(sine_mps(grid)));
    ASSERT_NEAR(u.scale(), 1.0, 1e-12);
    for (std::size_t p = 1; p <= 5; ++p) {
      EXPECT_NEAR(power_iterate(u, p).cumulative_probability,
                  success_probability_sum(grid, lift(kSine), p), 1e-10);
    }
  }
}

TEST(SuccessSum, BoundedAndMonotone) {
  const Grid grid = make_grid({{-1.0, 2.0, 7}});
  const ScalarFunction g = [](double x) { return std::cos(x) * 0.9; };
  double prev = 1.0;
  for (std::size_t p = 0; p <= 12; ++p) {
    const double s = success_probability_sum(grid, lift(g), p);
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
    EXPECT_LE(s, prev + 1e-15);
    prev = s;
  }
}

TEST(SuccessIntegral, SineHalf) {
  const auto r = success_probability_integral(kSine, 0.0, pi, 1, 10);
  EXPECT_NEAR(r.mean_integral, 0.5, 1e-9);
  EXPECT_NEAR(r.corrected, 0.5, 1e-9);
  EXPECT_NEAR(r.literal, 0.5, 1e-9);
}

TEST(SuccessIntegral, ConstantCorrectedIsOne) {
  for (std::size_t p : {1, 3, 10}) {
    for (std::size_t n : {1, 4, 9}) {
      const auto r = success_probability_integral(kOne, 0.0, 1.0, p, n);
      EXPECT_NEAR(r.corrected, 1.0, 1e-12);
      EXPECT_NEAR(r.symmetric, 1.0 - std::ldexp(1.0, -static_cast<int>(n)), 1e-12);
      EXPECT_NEAR(r.literal, 0.0, 1e-12);
    }
  }
}

TEST(SuccessIntegral, LinearGapShrinks) {
  double prev_gap = 1.0;
  for (unsigned n = 6; n <= 12; ++n) {
    const auto r = success_probability_integral(kLinear, 0.0, 1.0, 1, n);
    EXPECT_NEAR(r.mean_integral, 1.0 / 3.0, 1e-9);
    const double sum = success_probability_sum(make_grid({{0.0, 1.0, n}}), lift(kLinear), 1);
    const double gap = std::abs(sum - r.corrected);
    EXPECT_LE(gap, std::ldexp(1.0, -static_cast<int>(n)));
    EXPECT_LT(gap, prev_gap);
    prev_gap = gap;
  }
}

TEST(SuccessIntegral, RejectsBadBounds) {
  EXPECT_THROW(success_probability_integral(kOne, 1.0, 1.0, 1, 3), Error);
}

TEST(Scan, SineIsNearlyIndependentOfN) {
  const auto t = n_independence_scan(kSine, 0.0, pi, 1, {6, 8, 10});
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_LT(t.max_deviation, std::ldexp(1.0, -5));
  for (const auto& r : t.rows) {
    EXPECT_NEAR(r.exact, 0.5, 1e-3);
    EXPECT_DOUBLE_EQ(r.discrepancy, std::abs(r.exact - r.integral));
  }
}

TEST(Scan, ConstantHasZeroDeviation) {
  EXPECT_EQ(n_independence_scan(kOne, 0.0, 1.0, 3, {2, 5, 9}).max_deviation, 0.0);
}

TEST(Scan, DeviationShrinksWithN) {
  const ScalarFunction g = [](double x) { return std::exp(-x * x); };
  double prev = 1.0;
  for (std::size_t n = 3; n <= 11; ++n) {
    const double d = n_independence_scan(g, -1.0, 2.0, 2, {n, 12}).max_deviation;
    EXPECT_LT(d, prev);
    prev = d;
  }
}

TEST(Scan, RequiresQubits) { EXPECT_THROW(n_independence_scan(kOne, 0.0, 1.0, 1, {}), Error); }

TEST(RankGrowth, SineProductLaw) {
  const auto f = sine_mps(make_grid({{0.0, pi, 10}}));
  const auto rows = rank_growth_report(diag_mpo_from_mps(f), f, 3);
  ASSERT_EQ(rows.size(), 3u);
  const std::size_t expected[] = {4, 8, 16};
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(rows[j].formal_rank, expected[j]);
    EXPECT_EQ(rows[j].predicted_rank, expected[j]);
    EXPECT_EQ(rows[j].dense_cap, expected[j]);
  }
}

TEST(RankGrowth, IdentityStaysConstant) {
  const auto f = ones_tt(6);
  for (const auto& row : rank_growth_report(identity_mpo(6), f, 4)) {
    EXPECT_EQ(row.formal_rank, 1u);
    EXPECT_EQ(row.rounded_rank, 1u);
  }
}

TEST(RankGrowth, PredictionUntilCap) {
  for (unsigned n = 2; n <= 8; ++n) {
    const auto f = sine_mps(make_grid({{0.0, pi, n}}));
    const auto rows = rank_growth_report(diag_mpo_from_mps(f), f, 4);
    for (const auto& r : rows) {
      EXPECT_EQ(r.formal_rank, r.predicted_rank);
      EXPECT_LE(r.rounded_rank, r.dense_cap);
      EXPECT_EQ(r.dense_cap, std::min<std::size_t>(r.predicted_rank, std::size_t{1} << (n / 2)));
    }
  }
}

TEST(RankGrowth, SizeGuard) {
  std::vector<Core3<double>> cores;
  cores.emplace_back(1, 8);
  cores.emplace_back(8, 1);
  for (auto& c : cores) std::fill(c.data.begin(), c.data.end(), 1.0);
  const TTVector f(cores);
  try {
    rank_growth_report(diag_mpo_from_mps(f), f, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeLimit);
  }
}

TEST(Spearman, KnownValues) {
  EXPECT_NEAR(spearman_correlation({1, 2, 3, 4}, {10, 20, 30, 45}), 1.0, 1e-15);
  EXPECT_NEAR(spearman_correlation({1, 2, 3, 4}, {4, 3, 2, 1}), -1.0, 1e-15);
  EXPECT_NEAR(spearman_correlation({1, 2, 2, 3}, {1, 2, 3, 4}), 4.5 / std::sqrt(22.5), 1e-15);
  EXPECT_THROW(spearman_correlation({1}, {1}), Error);
}

TEST(Timing, SlopeOfCubic) {
  EXPECT_NEAR(log_log_slope({2, 4, 8, 16}, {8, 64, 512, 4096}), 3.0, 1e-12);
  const auto t = time_cost_evaluation(6, {2, 4}, 2, 0);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_GT(t.rows[0].seconds, 0.0);
  EXPECT_TRUE(std::isfinite(t.log_log_slope));
}

}  // namespace
}  // namespace tnqpi
