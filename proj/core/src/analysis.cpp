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

#include "tnqpi/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <random>

#include "tnqpi/benchmark_functions.hpp"
#include "tnqpi/error.hpp"
#include "tnqpi/unitary_fit.hpp"

namespace tnqpi {

namespace {

double power2p(double v, std::size_t p) { return std::pow(v, 2.0 * static_cast<double>(p)); }

}  // namespace

double success_probability_sum(const Grid& grid, const Objective& g, std::size_t p) {
  const std::uint64_t total = grid.num_points();
  double acc = 0.0;
  for (std::uint64_t k = 0; k < total; ++k) {
    const Point x = basis_to_point(grid, k);
    acc += power2p(g(x), p);
  }
  return acc / static_cast<double>(total);
}

SuccessProbabilityIntegral success_probability_integral(const ScalarFunction& g, double a,
                                                        double b, std::size_t p, std::size_t n,
                                                        std::size_t panels) {
  if (!(a < b)) throw Error(ErrorCode::kInvalidDomain, "integration bounds must satisfy a < b");
  if (panels == 0) throw Error(ErrorCode::kInvalidArgument, "quadrature needs at least one panel");
  const double h = (b - a) / static_cast<double>(panels);
  const double ga = power2p(g(a), p);
  const double gb = power2p(g(b), p);
  double acc = 0.5 * (ga + gb);
  for (std::size_t i = 1; i < panels; ++i) acc += power2p(g(a + h * static_cast<double>(i)), p);
  SuccessProbabilityIntegral out;
  out.mean_integral = acc * h / (b - a);
  const double lattice = std::ldexp(1.0, static_cast<int>(n) + 1);
  out.corrected = out.mean_integral + (ga - gb) / lattice;
  out.symmetric = out.mean_integral - (ga + gb) / lattice;
  out.literal = out.mean_integral - 0.5 * (ga + gb);
  return out;
}

SuccessProbabilityResult success_probability(const ScalarFunction& g, double a, double b,
                                             std::size_t p, std::size_t n) {
  const Grid grid = make_grid({{a, b, static_cast<unsigned>(n)}});
  SuccessProbabilityResult r;
  r.n = n;
  r.p = p;
  r.exact = success_probability_sum(grid, [&](std::span<const double> x) { return g(x[0]); }, p);
  const auto integral = success_probability_integral(g, a, b, p, n);
  r.integral = integral.corrected;
  r.literal_integral = integral.literal;
  r.discrepancy = std::abs(r.exact - r.integral);
  return r;
}

ScanTable n_independence_scan(const ScalarFunction& g, double a, double b, std::size_t p,
                              const std::vector<std::size_t>& qubits) {
  if (qubits.empty()) throw Error(ErrorCode::kInvalidArgument, "qubit list is empty");
  ScanTable table;
  for (std::size_t n : qubits) table.rows.push_back(success_probability(g, a, b, p, n));
  for (std::size_t i = 0; i < table.rows.size(); ++i)
    for (std::size_t j = i + 1; j < table.rows.size(); ++j)
      table.max_deviation =
          std::max(table.max_deviation, std::abs(table.rows[i].exact - table.rows[j].exact));
  return table;
}

std::vector<RankGrowthRow> rank_growth_report(const TTOperator& h, const TTVector& f0,
                                              std::size_t p) {
  if (p == 0) throw Error(ErrorCode::kInvalidArgument, "rank growth needs at least one step");
  const std::size_t n = h.num_qubits();
  const std::size_t rh = h.max_rank();
  const std::size_t rf = f0.max_rank();
  std::size_t predicted = rf;
  for (std::size_t j = 0; j < p; ++j) {
    predicted *= rh;
    if (predicted > kRankGrowthLimit) {
      throw Error(ErrorCode::kSizeLimit, "formal rank would exceed " +
                                             std::to_string(kRankGrowthLimit));
    }
  }
  const auto formal = classical_power_iteration(h, f0, p);
  const auto rounded = classical_power_iteration(h, f0, p, std::nullopt, 0.0);
  const std::size_t cap = std::size_t{1} << (n / 2);
  std::vector<RankGrowthRow> rows;
  predicted = rf;
  for (std::size_t j = 0; j < p; ++j) {
    predicted *= rh;
    rows.push_back({j + 1, formal.max_ranks[j], predicted, std::min(predicted, cap),
                    rounded.max_ranks[j]});
  }
  return rows;
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman_correlation(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kDimensionMismatch, "rank correlation needs two equal-length samples");
  }
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double mean = 0.5 * static_cast<double>(x.size() + 1);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kDimensionMismatch, "slope needs two equal-length samples");
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

TimingTable time_cost_evaluation(std::size_t n, const std::vector<std::size_t>& ranks,
                                 std::size_t repeats, std::uint64_t seed) {
  const Grid grid = make_grid({{0.0, std::numbers::pi, static_cast<unsigned>(n)}});
  const FitObjective objective(diag_mpo_from_mps(sine_mps(grid)));
  std::mt19937_64 rng(seed);
  TimingTable table;
  table.num_qubits = n;
  std::vector<double> xs, ys;
  for (std::size_t r : ranks) {
    const UnitaryMPO u = random_unitary_mpo(n, r, rng);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < std::max<std::size_t>(repeats, 1); ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto ev = objective.evaluate(u);
      const auto t1 = std::chrono::steady_clock::now();
      if (!std::isfinite(ev.cost)) continue;
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    table.rows.push_back({r, best});
    xs.push_back(static_cast<double>(r));
    ys.push_back(best);
  }
  if (xs.size() >= 2) table.log_log_slope = log_log_slope(xs, ys);
  return table;
}

}  // namespace tnqpi
