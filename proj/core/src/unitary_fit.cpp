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

#include "tnqpi/unitary_fit.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "tnqpi/error.hpp"

namespace tnqpi {

namespace {

using Mat = Eigen::MatrixXcd;

struct Slices {
  std::array<Mat, 4> m;  // index s * 2 + t
};

Slices slices_of(const Core4<cplx>& c) {
  Slices out;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) out.m[s * 2 + t] = c.slice(s, t);
  return out;
}

}  // namespace

FitObjective::FitObjective(const TTOperator& target)
    : target_(to_complex(target)), target_norm2_(std::real(mpo_inner(target_, target_))) {
  if (!(target_norm2_ > 0.0)) {
    throw Error(ErrorCode::kZeroNorm, "fit target has zero Frobenius norm");
  }
}

FitObjective::Evaluation FitObjective::evaluate(const UnitaryMPO& u, bool with_gradient) const {
  if (u.num_qubits() != target_.num_qubits()) {
    throw Error(ErrorCode::kDimensionMismatch, "unitary MPO and target differ in length");
  }
  const std::size_t n = u.num_qubits();
  const auto ut = boundary_contract(u);
  std::vector<Slices> us(n), hs(n);
  for (std::size_t k = 0; k < n; ++k) {
    us[k] = slices_of(ut.core(k));
    hs[k] = slices_of(target_.core(k));
  }

  // Right environments for <Ut, Ut> and <Ut, H>; env[k] sits on bond k.
  std::vector<Mat> fn(n + 1), fz(n + 1);
  fn[n] = Mat::Ones(1, 1);
  fz[n] = Mat::Ones(1, 1);
  for (std::size_t k = n; k-- > 0;) {
    const auto& c = ut.core(k);
    Mat accn = Mat::Zero(c.left, c.left);
    Mat accz = Mat::Zero(c.left, target_.core(k).left);
    for (int i = 0; i < 4; ++i) {
      const Mat& cu = us[k].m[i];
      accn.noalias() += cu.conjugate() * fn[k + 1] * cu.transpose();
      accz.noalias() += cu.conjugate() * fz[k + 1] * hs[k].m[i].transpose();
    }
    fn[k] = std::move(accn);
    fz[k] = std::move(accz);
  }

  const double norm_u = std::real(fn[0](0, 0));
  const double overlap = std::real(fz[0](0, 0));
  if (!(norm_u > 1e-300)) {
    throw Error(ErrorCode::kZeroNorm, "ancilla-projected block has zero norm");
  }
  Evaluation ev;
  ev.scale = overlap / norm_u;
  ev.cost = (target_norm2_ - overlap * ev.scale) / target_norm2_;
  if (!with_gradient) return ev;

  const double c = ev.scale;
  const double factor = 2.0 * c / target_norm2_;
  const std::size_t r = u.ansatz_rank();
  ev.gradient.assign(n, GateMatrix::Zero(u.gate_dim(), u.gate_dim()));
  Mat en = Mat::Ones(1, 1);
  Mat ez = Mat::Ones(1, 1);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& core = ut.core(k);
    auto& grad = ev.gradient[k];
    Mat next_n = Mat::Zero(core.right, core.right);
    Mat next_z = Mat::Zero(core.right, target_.core(k).right);
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) {
        const Mat& cu = us[k].m[s * 2 + t];
        const Mat& ch = hs[k].m[s * 2 + t];
        const Mat g = factor * (c * (en * cu * fn[k + 1].transpose()) -
                                ez * ch * fz[k + 1].transpose());
        for (std::size_t a = 0; a < core.left; ++a)
          for (std::size_t b = 0; b < core.right; ++b)
            grad(static_cast<Eigen::Index>(s * r + b), static_cast<Eigen::Index>(t * r + a)) =
                g(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
        next_n.noalias() += cu.adjoint() * en * cu;
        next_z.noalias() += cu.adjoint() * ez * ch;
      }
    en = std::move(next_n);
    ez = std::move(next_z);
  }
  return ev;
}

std::vector<GateMatrix> riemannian_gradient(const UnitaryMPO& u,
                                            const std::vector<GateMatrix>& euclidean) {
  std::vector<GateMatrix> out;
  out.reserve(euclidean.size());
  for (std::size_t k = 0; k < euclidean.size(); ++k) {
    const auto& g = euclidean[k];
    const auto& gate = u.gate(k);
    out.push_back(0.5 * (g - gate * g.adjoint() * gate));
  }
  return out;
}

namespace {

double dense_cost(const UnitaryMPO& u, const Eigen::MatrixXcd& h_dense, double h_norm2) {
  const Eigen::MatrixXcd ut = tt_to_dense(boundary_contract(u));
  const double norm_u = ut.squaredNorm();
  const double c = (ut.adjoint() * h_dense).trace().real() / norm_u;
  return (c * ut - h_dense).squaredNorm() / h_norm2;
}

}  // namespace

FitResult riemannian_fit(const TTOperator& target, const FitConfig& cfg) {
  if (!is_power_of_two(cfg.ansatz_rank)) {
    throw Error(ErrorCode::kInvalidArgument, "ansatz rank must be a power of two");
  }
  if (!(cfg.learning_rate > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "learning rate must be positive");
  }
  const auto start = std::chrono::steady_clock::now();
  const FitObjective objective(target);
  const std::size_t n = target.num_qubits();

  std::mt19937_64 rng(cfg.seed);
  UnitaryMPO u = cfg.initial                      ? *cfg.initial
                 : cfg.init == FitInit::kRandom ? random_unitary_mpo(n, cfg.ansatz_rank, rng)
                                                : near_identity_unitary_mpo(n, cfg.ansatz_rank,
                                                                            cfg.init_spread, rng);
  if (u.num_qubits() != n || u.ansatz_rank() != cfg.ansatz_rank) {
    throw Error(ErrorCode::kDimensionMismatch, "initial unitary MPO does not match the target");
  }

  const bool spot_check = cfg.dense_spot_check && n <= 6;
  Eigen::MatrixXcd h_dense;
  if (spot_check) h_dense = tt_to_dense(to_complex(target));

  FitReport report;
  report.seed = cfg.seed;
  auto record = [&](const UnitaryMPO& current, const FitObjective::Evaluation& ev) {
    report.cost_trace.push_back(ev.cost);
    report.scale_trace.push_back(ev.scale);
    report.max_unitarity_defect = std::max(report.max_unitarity_defect, current.unitarity_defect());
    if (spot_check) {
      report.max_dense_discrepancy =
          std::max(report.max_dense_discrepancy,
                   std::abs(ev.cost - dense_cost(current, h_dense, objective.target_norm2())));
    }
  };

  auto ev = objective.evaluate(u);
  u.set_scale(ev.scale);
  record(u, ev);
  report.initial_cost = ev.cost;
  UnitaryMPO best = u;
  double best_cost = ev.cost;

  double lr = cfg.learning_rate;
  std::size_t it = 0;
  for (; it < cfg.iterations; ++it) {
    const auto direction = riemannian_gradient(u, ev.gradient);
    std::size_t consecutive = 0;
    bool stepped = false;
    while (!stepped) {
      UnitaryMPO candidate = u;
      for (std::size_t k = 0; k < n; ++k) {
        candidate.gate(k) = qr_retract(u.gate(k) - lr * direction[k]);
      }
      FitObjective::Evaluation next;
      bool finite = true;
      try {
        next = objective.evaluate(candidate);
        finite = std::isfinite(next.cost);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kZeroNorm) throw;
        finite = false;
      }
      if (finite) {
        u = std::move(candidate);
        ev = std::move(next);
        stepped = true;
      } else {
        lr *= 0.5;
        ++report.lr_halvings;
        if (++consecutive > cfg.max_halvings) break;
      }
    }
    if (!stepped) {
      report.aborted = true;
      break;
    }
    u.set_scale(ev.scale);
    record(u, ev);
    if (ev.cost < best_cost) {
      best_cost = ev.cost;
      best = u;
      report.best_iteration = it + 1;
    }
  }

  report.iterations = it;
  report.best_cost = best_cost;
  report.final_cost = best_cost;
  report.final_scale = best.scale();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {std::move(best), std::move(report)};
}

}  // namespace tnqpi
