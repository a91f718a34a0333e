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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <random>
#include <set>

#include "tnqpi/benchmark_functions.hpp"
#include "tnqpi/cross.hpp"
#include "tnqpi/error.hpp"

namespace tnqpi {
namespace {

double volume(const Eigen::MatrixXd& m, const std::vector<Eigen::Index>& rows) {
  Eigen::MatrixXd sub(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) sub.row(static_cast<Eigen::Index>(i)) = m.row(rows[i]);
  return std::abs(sub.determinant());
}

TEST(Maxvol, IdentityTop) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(10, 3);
  m.topRows(3).setIdentity();
  auto rows = maxvol(m);
  std::sort(rows.begin(), rows.end());
  EXPECT_EQ(rows, (std::vector<Eigen::Index>{0, 1, 2}));
}

TEST(Maxvol, BeatsRandomChoices) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd m(64, 4);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = normal(rng);
  const auto rows = maxvol(m);
  const double v = volume(m, rows);
  std::vector<Eigen::Index> all(64);
  std::iota(all.begin(), all.end(), 0);
  for (int t = 0; t < 1000; ++t) {
    std::shuffle(all.begin(), all.end(), rng);
    EXPECT_GE(v, volume(m, {all.begin(), all.begin() + 4}));
  }
}

TEST(Maxvol, QuasiDominant) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd m(100, 6);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = normal(rng);
  const auto rows = maxvol(m, 1e-2);
  Eigen::MatrixXd sub(6, 6);
  for (int i = 0; i < 6; ++i) sub.row(i) = m.row(rows[static_cast<std::size_t>(i)]);
  const Eigen::MatrixXd b = m * sub.inverse();
  EXPECT_LE(b.cwiseAbs().maxCoeff(), 1.0 + 1e-2 + 1e-12);
}

TEST(Maxvol, PermutationEquivariant) {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd m(32, 3);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = normal(rng);
  std::vector<Eigen::Index> perm(32);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Eigen::MatrixXd pm(32, 3);
  for (Eigen::Index i = 0; i < 32; ++i) pm.row(i) = m.row(perm[static_cast<std::size_t>(i)]);
  const auto a = maxvol(m);
  const auto b = maxvol(pm);
  std::set<Eigen::Index> sa(a.begin(), a.end()), sb;
  for (auto i : b) sb.insert(perm[static_cast<std::size_t>(i)]);
  EXPECT_EQ(sa, sb);
}

TEST(Maxvol, RankDeficient) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(10, 2);
  m.col(0).setOnes();
  m.col(1).setOnes();
  try {
    maxvol(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankDeficient);
  }
}

IndexFunction on_grid(const Grid& g, std::function<double(const Point&)> f) {
  return [g, f](std::uint64_t b) { return f(basis_to_point(g, b)); };
}

double dense_relative_error(const CrossResult& r, const IndexFunction& f, std::size_t n) {
  double num = 0.0, den = 0.0;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    const double v = f(b);
    num += std::pow(r.tt.evaluate(b) - v, 2);
    den += v * v;
  }
  return std::sqrt(num / den);
}

TEST(Cross, SineRankTwo) {
  const Grid g = make_grid({{0.0, std::numbers::pi, 8}});
  const auto f = on_grid(g, [](const Point& x) { return std::sin(x[0]); });
  CrossConfig cfg;
  cfg.max_rank = 2;
  const auto r = tt_cross(f, 8, cfg);
  EXPECT_LT(r.validation_error, 1e-10);
  EXPECT_LT(dense_relative_error(r, f, 8), 1e-10);
  EXPECT_LE(r.tt.max_rank(), 2u);
}

TEST(Cross, AckleyRankSix) {
  const Grid g = make_grid({{-5, 5, 5}, {-5, 5, 5}});
  const auto f = on_grid(g, [](const Point& x) { return ackley(x[0], x[1]); });
  CrossConfig cfg;
  cfg.max_rank = 6;
  const auto r = tt_cross(f, 10, cfg);
  EXPECT_LE(r.tt.max_rank(), 6u);
  EXPECT_LT(dense_relative_error(r, f, 10), 0.1);
}

TEST(Cross, SeparableIsRankOne) {
  const Grid g = make_grid({{0, 1, 4}, {0, 1, 4}});
  const auto f = on_grid(g, [](const Point& x) { return std::exp(-x[0]) * std::exp(-x[1]); });
  CrossConfig cfg;
  cfg.max_rank = 3;
  const auto r = tt_cross(f, 8, cfg);
  EXPECT_EQ(r.tt.max_rank(), 1u);
  EXPECT_LT(dense_relative_error(r, f, 8), 1e-12);
}

TEST(Cross, BudgetRespected) {
  const Grid g = make_grid({{-5, 5, 5}, {-5, 5, 5}});
  const auto f = on_grid(g, [](const Point& x) { return ackley(x[0], x[1]); });
  for (std::size_t rank : {1, 2, 4, 6}) {
    for (std::size_t sweeps : {1, 3}) {
      CrossConfig cfg;
      cfg.max_rank = rank;
      cfg.n_sweeps = sweeps;
      std::uint64_t calls = 0;
      const auto r = tt_cross([&](std::uint64_t b) { ++calls; return f(b); }, 10, cfg);
      EXPECT_EQ(calls, r.evaluations);
      EXPECT_LE(r.evaluations, cross_evaluation_budget(10, cfg));
    }
  }
}

TEST(Cross, Deterministic) {
  const Grid g = make_grid({{-2.5, 2.5, 5}, {-2.5, 2.5, 5}});
  const auto f = on_grid(g, [](const Point& x) { return rosenbrock(x[0], x[1]); });
  CrossConfig cfg;
  cfg.max_rank = 4;
  cfg.seed = 99;
  const auto a = tt_cross(f, 10, cfg);
  const auto b = tt_cross(f, 10, cfg);
  EXPECT_EQ(a.tt, b.tt);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(Cross, InterpolatesAtCrossPoints) {
  const Grid g = make_grid({{-5, 5, 5}, {-5, 5, 5}});
  const auto f = on_grid(g, [](const Point& x) { return ackley(x[0], x[1]); });
  CrossConfig cfg;
  cfg.max_rank = 6;
  const auto r = tt_cross(f, 10, cfg);
  ASSERT_FALSE(r.interpolation_points.empty());
  double scale = 0.0;
  for (auto b : r.interpolation_points) scale = std::max(scale, std::abs(f(b)));
  for (auto b : r.interpolation_points) EXPECT_NEAR(r.tt.evaluate(b), f(b), 1e-12 * scale);
}

TEST(Cross, NonFiniteSample) {
  try {
    tt_cross([](std::uint64_t b) { return b == 3 ? std::nan("") : 1.0; }, 3, CrossConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFiniteSample);
  }
}

TEST(Cross, TraceAndFlags) {
  const Grid g = make_grid({{0.0, std::numbers::pi, 6}});
  CrossConfig cfg;
  cfg.max_rank = 2;
  const auto r = tt_cross(on_grid(g, [](const Point& x) { return std::sin(x[0]); }), 6, cfg);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.trace.size(), r.sweeps);
  EXPECT_GE(r.sweeps, 1u);
  EXPECT_LE(r.sweeps, cfg.n_sweeps);
}

TEST(Cross, RejectsBadConfig) {
  CrossConfig cfg;
  cfg.max_rank = 0;
  EXPECT_THROW(tt_cross([](std::uint64_t) { return 1.0; }, 3, cfg), Error);
}

}  // namespace
}  // namespace tnqpi
