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

#include "tnqpi/unitary_mpo.hpp"

#include <cmath>
#include <string>

#include "tnqpi/error.hpp"

namespace tnqpi {

namespace {

std::size_t log2_exact(std::size_t v) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < v) ++bits;
  return bits;
}

std::size_t next_power_of_two(std::size_t v) {
  std::size_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

/// Unitary whose columns at `positions` equal the orthonormal columns of v.
GateMatrix complete_columns(const Eigen::MatrixXcd& v, const std::vector<Eigen::Index>& positions) {
  const Eigen::Index dim = v.rows();
  const Eigen::Index m = v.cols();
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(v);
  const Eigen::MatrixXcd q = qr.householderQ();
  GateMatrix gate = GateMatrix::Zero(dim, dim);
  std::vector<bool> used(dim, false);
  for (Eigen::Index j = 0; j < m; ++j) {
    gate.col(positions[j]) = v.col(j);
    used[positions[j]] = true;
  }
  Eigen::Index filler = m;
  for (Eigen::Index c = 0; c < dim; ++c) {
    if (!used[c]) gate.col(c) = q.col(filler++);
  }
  return gate;
}

/// Scales v to a column isometry and returns the removed factor.
double isometric_scale(Eigen::MatrixXcd& v, double tol, std::size_t site) {
  const double lambda = v.norm() / std::sqrt(static_cast<double>(v.cols()));
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::kNonIsometric, "core " + std::to_string(site) + " vanishes");
  }
  v /= lambda;
  const Eigen::MatrixXcd gram = v.adjoint() * v;
  const double defect =
      (gram - Eigen::MatrixXcd::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff();
  if (defect > tol) {
    throw Error(ErrorCode::kNonIsometric,
                "core " + std::to_string(site) + " is not an isometry (defect " +
                    std::to_string(defect) + ")");
  }
  return lambda;
}

}  // namespace

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

UnitaryMPO::UnitaryMPO(std::vector<GateMatrix> gates, std::size_t ansatz_rank, double scale)
    : gates_(std::move(gates)), rank_(ansatz_rank), scale_(scale) {
  if (!is_power_of_two(rank_)) {
    throw Error(ErrorCode::kInvalidArgument, "ansatz rank must be a power of two");
  }
  if (gates_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "unitary MPO needs at least one gate");
  }
  ancillas_ = log2_exact(rank_);
  for (const auto& g : gates_) {
    if (g.rows() != static_cast<Eigen::Index>(2 * rank_) || g.cols() != g.rows()) {
      throw Error(ErrorCode::kInvalidArgument, "gate dimension must be 2R x 2R");
    }
  }
}

double UnitaryMPO::unitarity_defect() const {
  double worst = 0.0;
  for (const auto& g : gates_) {
    const auto id = GateMatrix::Identity(g.rows(), g.cols());
    worst = std::max(worst, (g.adjoint() * g - id).norm());
  }
  return worst;
}

GateMatrix qr_retract(const GateMatrix& a) {
  const Eigen::HouseholderQR<GateMatrix> qr(a);
  GateMatrix q = qr.householderQ();
  const auto diag = qr.matrixQR().diagonal();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const double mag = std::abs(diag(j));
    if (mag > 0.0) q.col(j) *= diag(j) / mag;
  }
  return q;
}

GateMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  GateMatrix a(dim, dim);
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, j) = cplx(normal(rng), normal(rng));
  return qr_retract(a);
}

UnitaryMPO random_unitary_mpo(std::size_t n, std::size_t ansatz_rank, std::mt19937_64& rng) {
  std::vector<GateMatrix> gates;
  gates.reserve(n);
  for (std::size_t k = 0; k < n; ++k) gates.push_back(random_unitary(2 * ansatz_rank, rng));
  return UnitaryMPO(std::move(gates), ansatz_rank);
}

UnitaryMPO near_identity_unitary_mpo(std::size_t n, std::size_t ansatz_rank, double spread,
                                     std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, spread);
  const auto dim = static_cast<Eigen::Index>(2 * ansatz_rank);
  std::vector<GateMatrix> gates;
  gates.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    GateMatrix a = GateMatrix::Identity(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
      for (Eigen::Index i = 0; i < dim; ++i) a(i, j) += cplx(normal(rng), normal(rng));
    gates.push_back(qr_retract(a));
  }
  return UnitaryMPO(std::move(gates), ansatz_rank);
}

UnitaryMPO identity_unitary_mpo(std::size_t n, std::size_t ansatz_rank) {
  const auto dim = static_cast<Eigen::Index>(2 * ansatz_rank);
  return UnitaryMPO(std::vector<GateMatrix>(n, GateMatrix::Identity(dim, dim)), ansatz_rank);
}

ComplexTTOperator boundary_contract(const UnitaryMPO& u) {
  const std::size_t n = u.num_qubits();
  const std::size_t r = u.ansatz_rank();
  std::vector<Core4<cplx>> cores;
  cores.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t left = k == 0 ? 1 : r;
    const std::size_t right = k + 1 == n ? 1 : r;
    const auto& g = u.gate(k);
    Core4<cplx> core(left, right);
    for (std::size_t a = 0; a < left; ++a)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
          for (std::size_t b = 0; b < right; ++b)
            core(a, s, t, b) = g(static_cast<Eigen::Index>(s * r + b),
                                 static_cast<Eigen::Index>(t * r + a));
    cores.push_back(std::move(core));
  }
  return ComplexTTOperator(std::move(cores));
}

double frobenius_cost(const UnitaryMPO& u, double c, const TTOperator& h) {
  const auto ut = boundary_contract(u);
  const auto hc = to_complex(h);
  const double norm_u = std::real(mpo_inner(ut, ut));
  const double overlap = std::real(mpo_inner(ut, hc));
  const double norm_h = std::real(mpo_inner(hc, hc));
  return c * c * norm_u - 2.0 * c * overlap + norm_h;
}

double optimal_scale(const UnitaryMPO& u, const TTOperator& h) {
  const auto ut = boundary_contract(u);
  const double norm_u = std::real(mpo_inner(ut, ut));
  if (!(norm_u > 1e-300)) {
    throw Error(ErrorCode::kZeroNorm, "ancilla-projected block has zero norm");
  }
  return std::real(mpo_inner(ut, to_complex(h))) / norm_u;
}

UnitaryMPO unitary_completion(const ComplexTTOperator& h, double tol) {
  const std::size_t n = h.num_qubits();
  const std::size_t r = next_power_of_two(h.max_rank());
  const auto dim = static_cast<Eigen::Index>(2 * r);
  auto row_of = [r](int bit, std::size_t bond) {
    return static_cast<Eigen::Index>(bit * r + bond);
  };

  std::vector<GateMatrix> gates;
  gates.reserve(n);
  double scale = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& core = h.core(k);
    const std::size_t left = core.left;
    const std::size_t right = core.right;
    if (k + 1 < n || n == 1) {
      // Designated columns (t, a) hold the core; rows (s, b).
      Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(dim, static_cast<Eigen::Index>(2 * left));
      std::vector<Eigen::Index> positions;
      for (int t = 0; t < 2; ++t)
        for (std::size_t a = 0; a < left; ++a) {
          const auto col = static_cast<Eigen::Index>(t * left + a);
          positions.push_back(row_of(t, a));
          for (int s = 0; s < 2; ++s)
            for (std::size_t b = 0; b < right; ++b) v(row_of(s, b), col) = core(a, s, t, b);
        }
      scale *= isometric_scale(v, tol, k);
      gates.push_back(complete_columns(v, positions));
    } else {
      // Last site: designated rows (s, 0) must be orthonormal.
      Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(dim, 2);
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
          for (std::size_t a = 0; a < left; ++a) w(row_of(t, a), s) = std::conj(core(a, s, t, 0));
      scale *= isometric_scale(w, tol, k);
      gates.push_back(complete_columns(w, {row_of(0, 0), row_of(1, 0)}).adjoint());
    }
  }
  return UnitaryMPO(std::move(gates), r, scale);
}

UnitaryMPO unitary_completion(const TTOperator& h, double tol) {
  return unitary_completion(to_complex(h), tol);
}

GateCountEstimate gate_count_estimate(std::size_t n, std::size_t ansatz_rank) {
  if (!is_power_of_two(ansatz_rank)) {
    throw Error(ErrorCode::kInvalidArgument, "ansatz rank must be a power of two");
  }
  const std::uint64_t r = ansatz_rank;
  const std::size_t qubits_per_gate = log2_exact(ansatz_rank) + 1;
  return {static_cast<std::uint64_t>(n) * r * r, std::uint64_t{1} << (2 * qubits_per_gate)};
}

}  // namespace tnqpi
