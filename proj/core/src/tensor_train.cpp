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

#include "tnqpi/tensor_train.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tnqpi/error.hpp"

namespace tnqpi {

namespace {

template <typename T>
using MatrixRM = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename T>
double abs2(T v) {
  return std::norm(v);
}

template <typename T>
void validate_chain(const std::vector<T>& cores, std::size_t per_bond) {
  if (cores.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "tensor train needs at least one core");
  }
  if (cores.front().left != 1 || cores.back().right != 1) {
    throw Error(ErrorCode::kDimensionMismatch, "border ranks must be 1");
  }
  for (std::size_t j = 0; j < cores.size(); ++j) {
    const auto& c = cores[j];
    if (c.left == 0 || c.right == 0 || c.data.size() != c.left * per_bond * c.right) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "core " + std::to_string(j) + " has inconsistent shape");
    }
    if (j + 1 < cores.size() && c.right != cores[j + 1].left) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "bond " + std::to_string(j + 1) + " ranks do not match");
    }
  }
}

template <typename Cores>
std::vector<std::size_t> chain_ranks(const Cores& cores) {
  std::vector<std::size_t> r;
  r.reserve(cores.size() + 1);
  r.push_back(cores.front().left);
  for (const auto& c : cores) r.push_back(c.right);
  return r;
}

template <typename T>
Matrix<T> left_unfold(const Core3<T>& c) {
  return Eigen::Map<const MatrixRM<T>>(c.data.data(), c.left * 2, c.right);
}

template <typename T>
Matrix<T> right_unfold(const Core3<T>& c) {
  return Eigen::Map<const MatrixRM<T>>(c.data.data(), c.left, 2 * c.right);
}

template <typename T>
Core3<T> from_left_unfold(const Matrix<T>& m, std::size_t left) {
  Core3<T> c(left, static_cast<std::size_t>(m.cols()));
  Eigen::Map<MatrixRM<T>>(c.data.data(), m.rows(), m.cols()) = m;
  return c;
}

template <typename T>
Core3<T> from_right_unfold(const Matrix<T>& m, std::size_t right) {
  Core3<T> c(static_cast<std::size_t>(m.rows()), right);
  Eigen::Map<MatrixRM<T>>(c.data.data(), m.rows(), m.cols()) = m;
  return c;
}

template <typename A, typename B>
void check_same_length(const A& a, const B& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "qubit counts differ: " + std::to_string(a.num_qubits()) + " vs " +
                    std::to_string(b.num_qubits()));
  }
}

}  // namespace

template <typename T>
Matrix<T> Core3<T>::slice(int s) const {
  Matrix<T> m(left, right);
  for (std::size_t a = 0; a < left; ++a)
    for (std::size_t b = 0; b < right; ++b) m(a, b) = (*this)(a, s, b);
  return m;
}

template <typename T>
Matrix<T> Core4<T>::slice(int row, int col) const {
  Matrix<T> m(left, right);
  for (std::size_t a = 0; a < left; ++a)
    for (std::size_t b = 0; b < right; ++b) m(a, b) = (*this)(a, row, col, b);
  return m;
}

template <typename T>
BasicTTVector<T>::BasicTTVector(std::vector<Core3<T>> cores) : cores_(std::move(cores)) {
  validate_chain(cores_, 2);
}

template <typename T>
std::vector<std::size_t> BasicTTVector<T>::ranks() const {
  return chain_ranks(cores_);
}

template <typename T>
std::size_t BasicTTVector<T>::max_rank() const {
  const auto r = ranks();
  return *std::max_element(r.begin(), r.end());
}

template <typename T>
std::size_t BasicTTVector<T>::storage_size() const {
  std::size_t total = 0;
  for (const auto& c : cores_) total += c.data.size();
  return total;
}

template <typename T>
T BasicTTVector<T>::evaluate(std::uint64_t basis) const {
  const std::size_t n = cores_.size();
  std::vector<T> v{T(1)};
  for (std::size_t j = 0; j < n; ++j) {
    const int bit = static_cast<int>((basis >> (n - 1 - j)) & 1U);
    const auto& c = cores_[j];
    std::vector<T> next(c.right, T(0));
    for (std::size_t a = 0; a < c.left; ++a)
      for (std::size_t b = 0; b < c.right; ++b) next[b] += v[a] * c(a, bit, b);
    v = std::move(next);
  }
  return v[0];
}

template <typename T>
BasicTTVector<T> BasicTTVector<T>::scaled(T alpha) const {
  auto cores = cores_;
  for (auto& v : cores.front().data) v *= alpha;
  return BasicTTVector(std::move(cores));
}

template <typename T>
BasicTTOperator<T>::BasicTTOperator(std::vector<Core4<T>> cores)
    : cores_(std::move(cores)) {
  validate_chain(cores_, 4);
}

template <typename T>
std::vector<std::size_t> BasicTTOperator<T>::ranks() const {
  return chain_ranks(cores_);
}

template <typename T>
std::size_t BasicTTOperator<T>::max_rank() const {
  const auto r = ranks();
  return *std::max_element(r.begin(), r.end());
}

template <typename T>
T BasicTTOperator<T>::evaluate(std::uint64_t row, std::uint64_t col) const {
  const std::size_t n = cores_.size();
  std::vector<T> v{T(1)};
  for (std::size_t j = 0; j < n; ++j) {
    const int k = static_cast<int>((row >> (n - 1 - j)) & 1U);
    const int l = static_cast<int>((col >> (n - 1 - j)) & 1U);
    const auto& c = cores_[j];
    std::vector<T> next(c.right, T(0));
    for (std::size_t a = 0; a < c.left; ++a)
      for (std::size_t b = 0; b < c.right; ++b) next[b] += v[a] * c(a, k, l, b);
    v = std::move(next);
  }
  return v[0];
}

template <typename T>
BasicTTOperator<T> BasicTTOperator<T>::scaled(T alpha) const {
  auto cores = cores_;
  for (auto& v : cores.front().data) v *= alpha;
  return BasicTTOperator(std::move(cores));
}

template <typename T>
Vector<T> tt_to_dense(const BasicTTVector<T>& x) {
  if (x.num_qubits() > kMaxDenseVectorQubits) {
    throw Error(ErrorCode::kSizeLimit, "dense vector limited to 16 qubits");
  }
  MatrixRM<T> m = MatrixRM<T>::Ones(1, 1);
  for (const auto& c : x.cores()) {
    const Eigen::Map<const MatrixRM<T>> unfolding(c.data.data(), c.left, 2 * c.right);
    MatrixRM<T> product = m * unfolding;
    m = Eigen::Map<MatrixRM<T>>(product.data(), product.rows() * 2, c.right);
  }
  return Eigen::Map<Vector<T>>(m.data(), m.rows());
}

template <typename T>
Matrix<T> tt_to_dense(const BasicTTOperator<T>& h) {
  if (h.num_qubits() > kMaxDenseOperatorQubits) {
    throw Error(ErrorCode::kSizeLimit, "dense operator limited to 10 qubits");
  }
  std::vector<Matrix<T>> blocks{Matrix<T>::Ones(1, 1)};
  for (const auto& c : h.cores()) {
    const Eigen::Index dim = blocks.front().rows();
    std::vector<Matrix<T>> next(c.right, Matrix<T>::Zero(2 * dim, 2 * dim));
    for (std::size_t a = 0; a < c.left; ++a) {
      const auto& block = blocks[a];
      for (std::size_t b = 0; b < c.right; ++b) {
        auto& out = next[b];
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) {
            const T w = c(a, k, l, b);
            if (w == T(0)) continue;
            for (Eigen::Index J = 0; J < dim; ++J)
              for (Eigen::Index K = 0; K < dim; ++K)
                out(K * 2 + k, J * 2 + l) += w * block(K, J);
          }
      }
    }
    blocks = std::move(next);
  }
  return blocks.front();
}

template <typename T>
T tt_inner(const BasicTTVector<T>& x, const BasicTTVector<T>& y) {
  check_same_length(x, y);
  Matrix<T> env = Matrix<T>::Ones(1, 1);
  for (std::size_t j = 0; j < x.num_qubits(); ++j) {
    const auto& cx = x.core(j);
    const auto& cy = y.core(j);
    Matrix<T> next = Matrix<T>::Zero(cx.right, cy.right);
    for (int s = 0; s < 2; ++s) next.noalias() += cx.slice(s).adjoint() * env * cy.slice(s);
    env = std::move(next);
  }
  return env(0, 0);
}

template <typename T>
double tt_norm(const BasicTTVector<T>& x) {
  return std::sqrt(std::max(0.0, std::real(tt_inner(x, x))));
}

template <typename T>
T mpo_inner(const BasicTTOperator<T>& a, const BasicTTOperator<T>& b) {
  check_same_length(a, b);
  Matrix<T> env = Matrix<T>::Ones(1, 1);
  for (std::size_t j = 0; j < a.num_qubits(); ++j) {
    const auto& ca = a.core(j);
    const auto& cb = b.core(j);
    Matrix<T> next = Matrix<T>::Zero(ca.right, cb.right);
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l)
        next.noalias() += ca.slice(k, l).adjoint() * env * cb.slice(k, l);
    env = std::move(next);
  }
  return env(0, 0);
}

template <typename T>
double mpo_frobenius_norm(const BasicTTOperator<T>& h) {
  return std::sqrt(std::max(0.0, std::real(mpo_inner(h, h))));
}

template <typename T>
BasicTTOperator<T> diag_mpo_from_mps(const BasicTTVector<T>& f) {
  std::vector<Core4<T>> cores;
  cores.reserve(f.num_qubits());
  for (const auto& c : f.cores()) {
    Core4<T> d(c.left, c.right);
    for (std::size_t a = 0; a < c.left; ++a)
      for (int k = 0; k < 2; ++k)
        for (std::size_t b = 0; b < c.right; ++b) d(a, k, k, b) = c(a, k, b);
    cores.push_back(std::move(d));
  }
  return BasicTTOperator<T>(std::move(cores));
}

template <typename T>
BasicTTVector<T> mpo_apply(const BasicTTOperator<T>& h, const BasicTTVector<T>& x) {
  check_same_length(h, x);
  std::vector<Core3<T>> cores;
  cores.reserve(x.num_qubits());
  for (std::size_t j = 0; j < x.num_qubits(); ++j) {
    const auto& ch = h.core(j);
    const auto& cx = x.core(j);
    Core3<T> out(ch.left * cx.left, ch.right * cx.right);
    for (std::size_t a = 0; a < ch.left; ++a)
      for (std::size_t b = 0; b < ch.right; ++b)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) {
            const T w = ch(a, k, l, b);
            if (w == T(0)) continue;
            for (std::size_t al = 0; al < cx.left; ++al)
              for (std::size_t be = 0; be < cx.right; ++be)
                out(a * cx.left + al, k, b * cx.right + be) += w * cx(al, l, be);
          }
    cores.push_back(std::move(out));
  }
  return BasicTTVector<T>(std::move(cores));
}

template <typename T>
BasicTTVector<T> hadamard(const BasicTTVector<T>& x, const BasicTTVector<T>& y) {
  return mpo_apply(diag_mpo_from_mps(x), y);
}

template <typename T>
BasicTTVector<T> tt_round(const BasicTTVector<T>& x, double tol, std::size_t max_rank) {
  if (tol < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "rounding tolerance must be non-negative");
  }
  const std::size_t n = x.num_qubits();
  auto cores = x.cores();
  if (n == 1) return BasicTTVector<T>(std::move(cores));

  for (std::size_t j = 0; j + 1 < n; ++j) {
    const Matrix<T> m = left_unfold(cores[j]);
    const Eigen::HouseholderQR<Matrix<T>> qr(m);
    const Eigen::Index k = std::min(m.rows(), m.cols());
    const Matrix<T> q = qr.householderQ() * Matrix<T>::Identity(m.rows(), k);
    const Matrix<T> r =
        qr.matrixQR().topRows(k).template triangularView<Eigen::Upper>();
    const std::size_t left = cores[j].left;
    cores[j] = from_left_unfold<T>(q, left);
    const std::size_t right = cores[j + 1].right;
    cores[j + 1] = from_right_unfold<T>(r * right_unfold(cores[j + 1]), right);
  }

  double norm2 = 0.0;
  for (const auto& v : cores.back().data) norm2 += abs2(v);
  const double delta = tol * std::sqrt(norm2) / std::sqrt(static_cast<double>(n - 1));
  const double delta2 = delta * delta;

  for (std::size_t j = n - 1; j > 0; --j) {
    const Matrix<T> m = right_unfold(cores[j]);
    const Eigen::BDCSVD<Matrix<T>> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    Eigen::Index keep = sigma.size();
    double tail = 0.0;
    while (keep > 1) {
      const double candidate = tail + sigma(keep - 1) * sigma(keep - 1);
      if (!(candidate < delta2)) break;
      tail = candidate;
      --keep;
    }
    if (static_cast<std::size_t>(keep) > std::max<std::size_t>(max_rank, 1)) {
      keep = static_cast<Eigen::Index>(std::max<std::size_t>(max_rank, 1));
    }
    const std::size_t right = cores[j].right;
    cores[j] = from_right_unfold<T>(svd.matrixV().leftCols(keep).adjoint(), right);
    const Matrix<T> us = svd.matrixU().leftCols(keep) *
                         sigma.head(keep).template cast<T>().asDiagonal();
    const std::size_t left = cores[j - 1].left;
    cores[j - 1] = from_left_unfold<T>(left_unfold(cores[j - 1]) * us, left);
  }
  return BasicTTVector<T>(std::move(cores));
}

template <typename T>
PowerIterationResult<T> classical_power_iteration(const BasicTTOperator<T>& h,
                                                  const BasicTTVector<T>& f0,
                                                  std::size_t steps,
                                                  std::optional<std::size_t> max_rank,
                                                  std::optional<double> tol) {
  check_same_length(h, f0);
  const bool rounding = max_rank.has_value() || tol.has_value();
  auto normalized = [](const BasicTTVector<T>& v) {
    const double norm = tt_norm(v);
    if (!std::isfinite(norm) || norm < 1e-300) {
      throw Error(ErrorCode::kZeroVector, "power iterate collapsed to the zero vector");
    }
    return v.scaled(T(1.0 / norm));
  };
  PowerIterationResult<T> result{normalized(f0), {}};
  result.max_ranks.reserve(steps);
  for (std::size_t step = 0; step < steps; ++step) {
    auto next = mpo_apply(h, result.state);
    if (rounding) next = tt_round(next, tol.value_or(0.0), max_rank.value_or(SIZE_MAX));
    result.state = normalized(next);
    result.max_ranks.push_back(result.state.max_rank());
  }
  return result;
}

TTVector ones_tt(std::size_t n) {
  std::vector<Core3<double>> cores(n, Core3<double>(1, 1));
  for (auto& c : cores) c.data = {1.0, 1.0};
  return TTVector(std::move(cores));
}

TTOperator identity_mpo(std::size_t n) {
  return diag_mpo_from_mps(ones_tt(n));
}

TTVector basis_state_tt(std::size_t n, std::uint64_t basis) {
  std::vector<Core3<double>> cores(n, Core3<double>(1, 1));
  for (std::size_t j = 0; j < n; ++j) {
    const int bit = static_cast<int>((basis >> (n - 1 - j)) & 1U);
    cores[j].data = {bit == 0 ? 1.0 : 0.0, bit == 1 ? 1.0 : 0.0};
  }
  return TTVector(std::move(cores));
}

ComplexTTVector to_complex(const TTVector& x) {
  std::vector<Core3<cplx>> cores;
  for (const auto& c : x.cores()) {
    Core3<cplx> z(c.left, c.right);
    std::copy(c.data.begin(), c.data.end(), z.data.begin());
    cores.push_back(std::move(z));
  }
  return ComplexTTVector(std::move(cores));
}

ComplexTTOperator to_complex(const TTOperator& h) {
  std::vector<Core4<cplx>> cores;
  for (const auto& c : h.cores()) {
    Core4<cplx> z(c.left, c.right);
    std::copy(c.data.begin(), c.data.end(), z.data.begin());
    cores.push_back(std::move(z));
  }
  return ComplexTTOperator(std::move(cores));
}

#define TNQPI_INSTANTIATE_TT(T)                                                     \
  template struct Core3<T>;                                                         \
  template struct Core4<T>;                                                         \
  template class BasicTTVector<T>;                                                  \
  template class BasicTTOperator<T>;                                                \
  template Vector<T> tt_to_dense(const BasicTTVector<T>&);                          \
  template Matrix<T> tt_to_dense(const BasicTTOperator<T>&);                        \
  template T tt_inner(const BasicTTVector<T>&, const BasicTTVector<T>&);            \
  template double tt_norm(const BasicTTVector<T>&);                                 \
  template T mpo_inner(const BasicTTOperator<T>&, const BasicTTOperator<T>&);       \
  template double mpo_frobenius_norm(const BasicTTOperator<T>&);                    \
  template BasicTTOperator<T> diag_mpo_from_mps(const BasicTTVector<T>&);           \
  template BasicTTVector<T> mpo_apply(const BasicTTOperator<T>&,                    \
                                      const BasicTTVector<T>&);                     \
  template BasicTTVector<T> hadamard(const BasicTTVector<T>&, const BasicTTVector<T>&); \
  template BasicTTVector<T> tt_round(const BasicTTVector<T>&, double, std::size_t); \
  template PowerIterationResult<T> classical_power_iteration(                       \
      const BasicTTOperator<T>&, const BasicTTVector<T>&, std::size_t,              \
      std::optional<std::size_t>, std::optional<double>);

TNQPI_INSTANTIATE_TT(double)
TNQPI_INSTANTIATE_TT(cplx)

#undef TNQPI_INSTANTIATE_TT

}  // namespace tnqpi
