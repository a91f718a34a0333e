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

#include "tnqpi/benchmark_functions.hpp"
#include "tnqpi/error.hpp"
#include "tnqpi/grid.hpp"

namespace tnqpi {
namespace {

using std::numbers::pi;

std::vector<double> lattice(const Grid& g) {
  std::vector<double> out;
  for (std::uint64_t k = 1; k <= g.points_along(0); ++k) {
    const MultiIndex m{k};
    out.push_back(index_to_point(g, m)[0]);
  }
  return out;
}

TEST(Grid, QuarterLatticeOnZeroPi) {
  const auto xs = lattice(make_grid({{0.0, pi, 2}}));
  ASSERT_EQ(xs.size(), 4u);
  EXPECT_DOUBLE_EQ(xs[0], 0.0);
  EXPECT_DOUBLE_EQ(xs[1], pi / 4);
  EXPECT_DOUBLE_EQ(xs[2], pi / 2);
  EXPECT_DOUBLE_EQ(xs[3], 3 * pi / 4);
}

TEST(Grid, SingleQubitUnitInterval) {
  const auto xs = lattice(make_grid({{0.0, 1.0, 1}}));
  ASSERT_EQ(xs.size(), 2u);
  EXPECT_DOUBLE_EQ(xs[0], 0.0);
  EXPECT_DOUBLE_EQ(xs[1], 0.5);
}

TEST(Grid, TwoDimensionalAckleyBox) {
  const Grid g = make_grid({{-5, 5, 5}, {-5, 5, 5}});
  EXPECT_EQ(g.total_qubits(), 10u);
  EXPECT_EQ(g.points_along(0), 32u);
  EXPECT_EQ(g.points_along(1), 32u);
  EXPECT_EQ(g.num_points(), 1024u);
  const MultiIndex corner{1, 1};
  const auto x = index_to_point(g, corner);
  EXPECT_DOUBLE_EQ(x[0], -5.0);
  EXPECT_DOUBLE_EQ(x[1], -5.0);
}

TEST(Grid, IndexThreeIsHalfPi) {
  const Grid g = make_grid({{0.0, pi, 2}});
  const MultiIndex k{3};
  EXPECT_DOUBLE_EQ(index_to_point(g, k)[0], pi / 2);
}

TEST(Grid, FirstIndexIsLowerBound) {
  for (double a : {-3.0, 0.0, 2.5}) {
    const Grid g = make_grid({{a, a + 1.7, 4}});
    const MultiIndex k{1};
    EXPECT_DOUBLE_EQ(index_to_point(g, k)[0], a);
  }
}

TEST(Grid, RejectsInvalidDomain) {
  try {
    make_grid({{1.0, 1.0, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidDomain);
  }
  try {
    make_grid({{0.0, 1.0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroQubitDimension);
  }
}

TEST(Grid, IndexOutOfRange) {
  const Grid g = make_grid({{0.0, 1.0, 2}});
  const MultiIndex zero{0};
  const MultiIndex five{5};
  EXPECT_THROW(index_to_point(g, zero), Error);
  EXPECT_THROW(index_to_point(g, five), Error);
}

TEST(Grid, RoundTripExhaustive) {
  for (unsigned n = 1; n <= 10; ++n) {
    const Grid g = make_grid({{-1.3, 2.9, n}});
    for (std::uint64_t k = 1; k <= g.points_along(0); ++k) {
      const MultiIndex m{k};
      const auto x = index_to_point(g, m);
      EXPECT_EQ(point_to_index(g, x)[0], k);
    }
  }
  const Grid g2 = make_grid({{-5, 5, 3}, {0, 1, 4}});
  for (std::uint64_t b = 0; b < g2.num_points(); ++b) {
    const auto k = basis_to_multi_index(g2, b);
    EXPECT_EQ(multi_index_to_basis(g2, k), b);
    EXPECT_EQ(point_to_index(g2, index_to_point(g2, k)), k);
  }
}

TEST(Grid, StrictlyIncreasing) {
  const auto xs = lattice(make_grid({{-2.0, 7.0, 8}}));
  for (std::size_t i = 1; i < xs.size(); ++i) EXPECT_LT(xs[i - 1], xs[i]);
}

TEST(Grid, FirstDimensionIsMostSignificant) {
  const Grid g = make_grid({{0, 1, 2}, {0, 1, 3}});
  const MultiIndex k{2, 1};
  EXPECT_EQ(multi_index_to_basis(g, k), 8u);
  const MultiIndex k2{1, 2};
  EXPECT_EQ(multi_index_to_basis(g, k2), 1u);
}

std::vector<Point> all_points(const Grid& g) {
  std::vector<Point> pts;
  for (std::uint64_t b = 0; b < g.num_points(); ++b) pts.push_back(basis_to_point(g, b));
  return pts;
}

TEST(Preprocess, AckleyArgmaxAtOrigin) {
  const Grid g = make_grid({{-5, 5, 5}, {-5, 5, 5}});
  ObjectiveSpec spec{[](std::span<const double> x) { return ackley(x[0], x[1]); },
                     Direction::kMinimize};
  const auto pts = all_points(g);
  spec = preprocess_objective(spec, pts);
  std::uint64_t best = 0;
  double best_v = -1;
  for (std::uint64_t b = 0; b < pts.size(); ++b) {
    const double v = spec(pts[b]);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    if (v > best_v) {
      best_v = v;
      best = b;
    }
  }
  EXPECT_DOUBLE_EQ(best_v, 1.0);
  const auto x = basis_to_point(g, best);
  EXPECT_DOUBLE_EQ(x[0], 0.0);
  EXPECT_DOUBLE_EQ(x[1], 0.0);
}

TEST(Preprocess, SineIsPassThrough) {
  const Grid g = make_grid({{0.0, pi, 3}});
  ObjectiveSpec spec{[](std::span<const double> x) { return std::sin(x[0]); },
                     Direction::kMaximize};
  spec = preprocess_objective(spec, all_points(g));
  EXPECT_DOUBLE_EQ(spec.scale, 1.0);
  EXPECT_FALSE(spec.degenerate);
  for (const auto& x : all_points(g)) EXPECT_DOUBLE_EQ(spec(x), std::sin(x[0]));
}

TEST(Preprocess, ConstantIsDegenerate) {
  const Grid g = make_grid({{0.0, 1.0, 3}});
  ObjectiveSpec spec{[](std::span<const double>) { return 4.0; }, Direction::kMinimize};
  spec = preprocess_objective(spec, all_points(g));
  EXPECT_TRUE(spec.degenerate);
  for (const auto& x : all_points(g)) EXPECT_DOUBLE_EQ(spec(x), 0.0);
  ObjectiveSpec up{[](std::span<const double>) { return 4.0; }, Direction::kMaximize};
  up = preprocess_objective(up, all_points(g));
  EXPECT_TRUE(up.degenerate);
  for (const auto& x : all_points(g)) EXPECT_DOUBLE_EQ(up(x), 1.0);
}

TEST(Preprocess, MinimizeArgmaxMatchesArgmin) {
  const Grid g = make_grid({{-2.5, 2.5, 4}, {-2.5, 2.5, 4}});
  ObjectiveSpec spec{[](std::span<const double> x) { return rosenbrock(x[0], x[1]); },
                     Direction::kMinimize};
  const auto pts = all_points(g);
  spec = preprocess_objective(spec, pts);
  std::size_t argmin = 0, argmax = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (rosenbrock(pts[i][0], pts[i][1]) < rosenbrock(pts[argmin][0], pts[argmin][1])) argmin = i;
    if (spec(pts[i]) > spec(pts[argmax])) argmax = i;
  }
  EXPECT_EQ(argmin, argmax);
}

TEST(Preprocess, ClipsUnsampledValues) {
  ObjectiveSpec spec{[](std::span<const double> x) { return x[0]; }, Direction::kMaximize};
  spec = preprocess_objective(spec, {{1.0}, {2.0}});
  const double big[] = {3.0};
  const auto v = spec.normalize(spec.evaluator(big));
  EXPECT_TRUE(v.clipped);
  EXPECT_DOUBLE_EQ(v.value, 1.0);
}

TEST(Preprocess, RequiresSamples) {
  ObjectiveSpec spec{[](std::span<const double> x) { return x[0]; }, Direction::kMaximize};
  EXPECT_THROW(preprocess_objective(spec, {}), Error);
}

TEST(ConfigText, RoundTrip) {
  DiscretizationConfig c{make_grid({{-5, 5, 5}, {-2.5, 2.5, 3}}), Direction::kMinimize, 14.2,
                         13.9, false};
  const auto back = parse_config_text(to_config_text(c));
  EXPECT_EQ(back.grid, c.grid);
  EXPECT_EQ(back.direction, c.direction);
  EXPECT_EQ(back.shift, c.shift);
  EXPECT_EQ(back.scale, c.scale);
  EXPECT_EQ(back.degenerate, c.degenerate);
  EXPECT_THROW(parse_config_text("{not json"), Error);
}

}  // namespace
}  // namespace tnqpi
