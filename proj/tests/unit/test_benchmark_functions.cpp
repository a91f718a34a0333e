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
#include <random>

#include "tnqpi/benchmark_functions.hpp"
#include "tnqpi/error.hpp"

namespace tnqpi {
namespace {

using std::numbers::pi;

TEST(Functions, Sine) {
  EXPECT_EQ(sine(0.0), 0.0);
  EXPECT_DOUBLE_EQ(sine(pi / 2), 1.0);
  EXPECT_NEAR(sine(pi / 4), std::sqrt(0.5), 1e-15);
}

TEST(Functions, Ackley) {
  EXPECT_NEAR(ackley(0.0, 0.0), 0.0, 1e-14);
  EXPECT_NEAR(ackley(1.0, 1.0), 3.6253849384403627, 1e-12);
  EXPECT_DOUBLE_EQ(ackley(1.3, -2.1), ackley(-1.3, 2.1));
  EXPECT_DOUBLE_EQ(ackley(1.3, -2.1), ackley(-2.1, 1.3));
}

TEST(Functions, Rosenbrock) {
  EXPECT_EQ(rosenbrock(1.0, 1.0), 0.0);
  EXPECT_EQ(rosenbrock(0.0, 0.0), 1.0);
  EXPECT_EQ(rosenbrock(-1.0, 1.0), 4.0);
}

TEST(Registry, OptimaAndLookup) {
  ASSERT_EQ(benchmark_registry().size(), 3u);
  for (const auto& b : benchmark_registry()) {
    EXPECT_EQ(b.domain.size(), b.dimension);
    EXPECT_NEAR(b.evaluator(b.optimum), b.optimum_value, 1e-12) << b.name;
    EXPECT_EQ(&find_benchmark(b.name), &b);
  }
  EXPECT_THROW(find_benchmark("nope"), Error);
}

TEST(Registry, MinimizersAreNonNegative) {
  std::mt19937_64 rng(3);
  for (const auto& b : benchmark_registry()) {
    if (b.direction != Direction::kMinimize) continue;
    for (int i = 0; i < 1000; ++i) {
      Point x;
      for (const auto& d : b.domain) x.push_back(std::uniform_real_distribution<double>(d.lower, d.upper)(rng));
      EXPECT_GE(b.evaluator(x), 0.0);
      EXPECT_GE(b.evaluator(x), b.optimum_value);
    }
  }
}

TEST(SineMps, ExactOnLattice) {
  for (unsigned n = 1; n <= 12; ++n) {
    const Grid grid = make_grid({{0.0, pi, n}});
    const TTVector f = sine_mps(grid);
    EXPECT_LE(f.max_rank(), 2u);
    for (std::uint64_t k = 0; k < grid.num_points(); ++k) {
      EXPECT_NEAR(f.evaluate(k), std::sin(basis_to_point(grid, k)[0]), 1e-13);
    }
  }
  EXPECT_NEAR(sine_mps(make_grid({{-1.0, 2.0, 5}})).evaluate(7),
              std::sin(-1.0 + 7 * 3.0 / 32), 1e-13);
  EXPECT_THROW(sine_mps(make_grid({{0.0, 1.0, 2}, {0.0, 1.0, 2}})), Error);
}

TEST(Tabulated, ParsesWithHeader) {
  const Grid grid = make_grid({{0.0, 1.0, 1}, {0.0, 1.0, 1}});
  const auto t = parse_tabulated_objective("i,j,value\n1,1,0.5\n1,2,1.5\n# note\n2,1,2\n2,2,-1\n", grid);
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.at_basis(0), 0.5);
  EXPECT_EQ(t.at_basis(1), 1.5);
  EXPECT_EQ(t.at_basis(2), 2.0);
  EXPECT_EQ(t.at_basis(3), -1.0);
  const double x[] = {0.5, 0.0};
  EXPECT_EQ(t(x), 2.0);
}

TEST(Tabulated, Errors) {
  const Grid grid = make_grid({{0.0, 1.0, 2}});
  EXPECT_THROW(parse_tabulated_objective("1,2,3\n", grid), Error);
  EXPECT_THROW(parse_tabulated_objective("k,v\nk,v\n", grid), Error);
  EXPECT_THROW(parse_tabulated_objective("1,0.1\nx,0.2\n", grid), Error);
  EXPECT_THROW(parse_tabulated_objective("5,0.1\n", grid), Error);
  const auto t = parse_tabulated_objective("1,0.1\n", grid);
  EXPECT_TRUE(t.contains(0));
  EXPECT_FALSE(t.contains(1));
  try {
    t.at_basis(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
}

}  // namespace
}  // namespace tnqpi
