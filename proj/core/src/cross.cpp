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

#include "tnqpi/cross.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "tnqpi/error.hpp"

namespace tnqpi {

namespace {

constexpr double kFiberRankTolerance = 1e-12;

std::size_t bond_cap(std::size_t n, std::size_t j, std::size_t max_rank) {
  const auto side = [](std::size_t bits) {
    return bits >= 20 ? std::size_t{1} << 20 : std::size_t{1} << bits;
  };
  return std::min({max_rank, side(j), side(n - j)});
}

class CachedFunction {
 public:
  explicit CachedFunction(const IndexFunction& g) : g_(g) {}

  double operator()(std::uint64_t basis) {
    if (auto it = cache_.find(basis); it != cache_.end()) return it->second;
    const double v = g_(basis);
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFiniteSample,
                  "black box returned a non-finite value at basis state " + std::to_string(basis));
    }
    cache_.emplace(basis, v);
    return v;
  }

  std::uint64_t evaluations() const { return cache_.size(); }

 private:
  const IndexFunction& g_;
  std::unordered_map<std::uint64_t, double> cache_;
};

/// Leading left singular vectors with sigma > tol * sigma_max, at most `cap`.
Eigen::MatrixXd dominant_basis(const Eigen::MatrixXd& m, std::size_t cap) {
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  Eigen::Index keep = 0;
  const double floor = sigma.size() > 0 ? sigma(0) * kFiberRankTolerance : 0.0;
  while (keep < sigma.size() && sigma(keep) > floor) ++keep;
  keep = std::clamp<Eigen::Index>(keep, 1, static_cast<Eigen::Index>(cap));
  return svd.matrixU().leftCols(keep);
}

std::vector<std::uint64_t> random_distinct(std::uint64_t universe, std::size_t count,
                                           std::mt19937_64& rng) {
  std::vector<std::uint64_t> picked;
  if (universe <= count) {
    for (std::uint64_t v = 0; v < universe; ++v) picked.push_back(v);
    return picked;
  }
  std::unordered_set<std::uint64_t> seen;
  std::uniform_int_distribution<std::uint64_t> dist(0, universe - 1);
  while (picked.size() < count) {
    const auto v = dist(rng);
    if (seen.insert(v).second) picked.push_back(v);
  }
  return picked;
}

}  // namespace

std::vector<Eigen::Index> maxvol(const Eigen::MatrixXd& m, double tol, std::size_t max_iters) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index r = m.cols();
  if (rows < r || r == 0) {
    throw Error(ErrorCode::kInvalidArgument, "maxvol needs a tall matrix");
  }
  // Initial pivots from Gaussian elimination with partial pivoting.
  Eigen::MatrixXd work = m;
  std::vector<Eigen::Index> pivots;
  std::vector<bool> used(rows, false);
  const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
  for (Eigen::Index c = 0; c < r; ++c) {
    Eigen::Index best = -1;
    double best_mag = 0.0;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (!used[i] && std::abs(work(i, c)) > best_mag) {
        best_mag = std::abs(work(i, c));
        best = i;
      }
    }
    if (best < 0 || best_mag <= 1e-13 * scale) {
      throw Error(ErrorCode::kRankDeficient, "maxvol input is rank deficient");
    }
    used[best] = true;
    pivots.push_back(best);
    const Eigen::RowVectorXd pivot_row = work.row(best) / work(best, c);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i != best) work.row(i) -= work(i, c) * pivot_row;
    }
  }

  Eigen::MatrixXd square(r, r);
  for (Eigen::Index j = 0; j < r; ++j) square.row(j) = m.row(pivots[j]);
  Eigen::MatrixXd b = m * square.partialPivLu().inverse();

  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    Eigen::Index i = 0;
    Eigen::Index j = 0;
    const double peak = b.cwiseAbs().maxCoeff(&i, &j);
    if (peak <= 1.0 + tol) break;
    pivots[j] = i;
    Eigen::RowVectorXd delta = b.row(i);
    delta(j) -= 1.0;
    const Eigen::VectorXd col = b.col(j) / b(i, j);
    b.noalias() -= col * delta;
  }
  return pivots;
}

std::uint64_t cross_evaluation_budget(std::size_t n, const CrossConfig& cfg) {
  std::uint64_t per_pass_full = 0;
  std::uint64_t per_pass_short = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t fiber =
        2 * bond_cap(n, j, cfg.max_rank) * bond_cap(n, j + 1, cfg.max_rank);
    per_pass_full += fiber;
    if (j + 1 < n) per_pass_short += fiber;
  }
  return cfg.validation_sample_count + cfg.n_sweeps * (per_pass_full + per_pass_short);
}

CrossResult tt_cross(const IndexFunction& g, std::size_t n, const CrossConfig& cfg) {
  if (n == 0 || n > 62) throw Error(ErrorCode::kInvalidArgument, "tt_cross needs 1..62 qubits");
  if (cfg.max_rank < 1 || cfg.n_sweeps < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_rank and n_sweeps must be positive");
  }
  std::mt19937_64 rng(cfg.seed);
  CachedFunction f(g);

  // left[j]: prefixes of j bits; right[j]: suffixes covering qubits j..n-1.
  std::vector<std::vector<std::uint64_t>> left(n + 1), right(n + 1);
  left[0] = {0};
  right[n] = {0};
  for (std::size_t j = 1; j < n; ++j) {
    right[j] = random_distinct(std::uint64_t{1} << (n - j), bond_cap(n, j, cfg.max_rank), rng);
  }

  const std::uint64_t universe = n >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  const auto validation = random_distinct(universe, cfg.validation_sample_count, rng);
  std::vector<double> validation_values;
  double validation_norm2 = 0.0;
  for (const auto v : validation) {
    validation_values.push_back(f(v));
    validation_norm2 += validation_values.back() * validation_values.back();
  }

  auto point = [n](std::uint64_t prefix, std::size_t j, int s, std::uint64_t suffix) {
    return (prefix << (n - j)) | (static_cast<std::uint64_t>(s) << (n - j - 1)) | suffix;
  };

  CrossResult result;
  std::vector<Core3<double>> cores(n);
  double previous_error = std::numeric_limits<double>::infinity();

  for (std::size_t sweep = 0; sweep < cfg.n_sweeps; ++sweep) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const auto& lj = left[j];
      const auto& rj = right[j + 1];
      Eigen::MatrixXd fiber(static_cast<Eigen::Index>(lj.size() * 2),
                            static_cast<Eigen::Index>(rj.size()));
      for (std::size_t a = 0; a < lj.size(); ++a)
        for (int s = 0; s < 2; ++s)
          for (std::size_t b = 0; b < rj.size(); ++b)
            fiber(static_cast<Eigen::Index>(a * 2 + s), static_cast<Eigen::Index>(b)) =
                f(point(lj[a], j, s, rj[b]));
      const auto q = dominant_basis(fiber, bond_cap(n, j + 1, cfg.max_rank));
      std::vector<std::uint64_t> next;
      for (const auto row : maxvol(q)) {
        next.push_back((lj[static_cast<std::size_t>(row) / 2] << 1) |
                       static_cast<std::uint64_t>(row % 2));
      }
      left[j + 1] = std::move(next);
    }

    result.interpolation_points.clear();
    for (std::size_t j = n; j-- > 0;) {
      const auto& lj = left[j];
      const auto& rj = right[j + 1];
      const std::size_t width = rj.size();
      Eigen::MatrixXd fiber(static_cast<Eigen::Index>(lj.size()),
                            static_cast<Eigen::Index>(2 * width));
      for (std::size_t a = 0; a < lj.size(); ++a)
        for (int s = 0; s < 2; ++s)
          for (std::size_t b = 0; b < width; ++b) {
            const auto p = point(lj[a], j, s, rj[b]);
            result.interpolation_points.push_back(p);
            fiber(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(s * width + b)) = f(p);
          }
      if (j == 0) {
        Core3<double> core(1, width);
        for (int s = 0; s < 2; ++s)
          for (std::size_t b = 0; b < width; ++b)
            core(0, s, b) = fiber(0, static_cast<Eigen::Index>(s * width + b));
        cores[0] = std::move(core);
        break;
      }
      const Eigen::MatrixXd q = dominant_basis(fiber.transpose(), bond_cap(n, j, cfg.max_rank));
      const auto rows = maxvol(q);
      Eigen::MatrixXd pivot_block(q.cols(), q.cols());
      std::vector<std::uint64_t> next;
      for (std::size_t c = 0; c < rows.size(); ++c) {
        pivot_block.row(static_cast<Eigen::Index>(c)) = q.row(rows[c]);
        const std::size_t s = static_cast<std::size_t>(rows[c]) / width;
        const std::size_t b = static_cast<std::size_t>(rows[c]) % width;
        next.push_back((static_cast<std::uint64_t>(s) << (n - j - 1)) | rj[b]);
      }
      const Eigen::MatrixXd interp = q * pivot_block.partialPivLu().inverse();
      Core3<double> core(static_cast<std::size_t>(interp.cols()), width);
      for (Eigen::Index a = 0; a < interp.cols(); ++a)
        for (int s = 0; s < 2; ++s)
          for (std::size_t b = 0; b < width; ++b)
            core(static_cast<std::size_t>(a), s, b) =
                interp(static_cast<Eigen::Index>(s * width + b), a);
      cores[j] = std::move(core);
      right[j] = std::move(next);
    }

    result.tt = TTVector(cores);
    double err2 = 0.0;
    for (std::size_t i = 0; i < validation.size(); ++i) {
      const double d = result.tt.evaluate(validation[i]) - validation_values[i];
      err2 += d * d;
    }
    const double error = validation_norm2 > 0.0 ? std::sqrt(err2 / validation_norm2)
                                                : std::sqrt(err2);
    result.validation_error = error;
    result.sweeps = sweep + 1;
    result.trace.push_back({sweep + 1, f.evaluations(), error});
    if (error <= cfg.tol || previous_error - error < cfg.tol) {
      result.converged = true;
      break;
    }
    previous_error = error;
  }
  result.evaluations = f.evaluations();
  return result;
}

}  // namespace tnqpi
