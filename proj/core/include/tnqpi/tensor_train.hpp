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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace tnqpi {

using cplx = std::complex<double>;

template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

/// Order-3 core of shape left x 2 x right, row-major.
template <typename T>
struct Core3 {
  std::size_t left = 1;
  std::size_t right = 1;
  std::vector<T> data = std::vector<T>(2);

  Core3() = default;
  Core3(std::size_t l, std::size_t r) : left(l), right(r), data(l * 2 * r) {}

  T& operator()(std::size_t a, int s, std::size_t b) {
    return data[(a * 2 + s) * right + b];
  }
  const T& operator()(std::size_t a, int s, std::size_t b) const {
    return data[(a * 2 + s) * right + b];
  }
  /// left x right matrix for physical index s.
  Matrix<T> slice(int s) const;
  bool operator==(const Core3&) const = default;
};

/// Order-4 core of shape left x 2 (row) x 2 (column) x right, row-major.
template <typename T>
struct Core4 {
  std::size_t left = 1;
  std::size_t right = 1;
  std::vector<T> data = std::vector<T>(4);

  Core4() = default;
  Core4(std::size_t l, std::size_t r) : left(l), right(r), data(l * 4 * r) {}

  T& operator()(std::size_t a, int row, int col, std::size_t b) {
    return data[((a * 2 + row) * 2 + col) * right + b];
  }
  const T& operator()(std::size_t a, int row, int col, std::size_t b) const {
    return data[((a * 2 + row) * 2 + col) * right + b];
  }
  Matrix<T> slice(int row, int col) const;
  bool operator==(const Core4&) const = default;
};

/// Matrix product state over qubits. Core j carries bit j of the basis
/// index counted from the most significant end.
template <typename T>
class BasicTTVector {
 public:
  using Scalar = T;

  BasicTTVector() = default;
  /// Validates border ranks r_0 = r_n = 1 and matching bonds.
  explicit BasicTTVector(std::vector<Core3<T>> cores);

  std::size_t num_qubits() const { return cores_.size(); }
  const std::vector<Core3<T>>& cores() const { return cores_; }
  const Core3<T>& core(std::size_t j) const { return cores_[j]; }
  /// r_0 .. r_n
  std::vector<std::size_t> ranks() const;
  std::size_t max_rank() const;
  /// Number of stored scalars, sum over j of 2 r_{j-1} r_j.
  std::size_t storage_size() const;

  T evaluate(std::uint64_t basis) const;
  /// Multiplies the first core by `alpha`.
  BasicTTVector scaled(T alpha) const;

  bool operator==(const BasicTTVector&) const = default;

 private:
  std::vector<Core3<T>> cores_;
};

/// Matrix product operator over qubits.
template <typename T>
class BasicTTOperator {
 public:
  using Scalar = T;

  BasicTTOperator() = default;
  explicit BasicTTOperator(std::vector<Core4<T>> cores);

  std::size_t num_qubits() const { return cores_.size(); }
  const std::vector<Core4<T>>& cores() const { return cores_; }
  const Core4<T>& core(std::size_t j) const { return cores_[j]; }
  std::vector<std::size_t> ranks() const;
  std::size_t max_rank() const;

  T evaluate(std::uint64_t row, std::uint64_t col) const;
  BasicTTOperator scaled(T alpha) const;

  bool operator==(const BasicTTOperator&) const = default;

 private:
  std::vector<Core4<T>> cores_;
};

using TTVector = BasicTTVector<double>;
using TTOperator = BasicTTOperator<double>;
using ComplexTTVector = BasicTTVector<cplx>;
using ComplexTTOperator = BasicTTOperator<cplx>;

/// Memory guards for dense conversion.
inline constexpr std::size_t kMaxDenseVectorQubits = 16;
inline constexpr std::size_t kMaxDenseOperatorQubits = 10;

template <typename T>
Vector<T> tt_to_dense(const BasicTTVector<T>& x);
template <typename T>
Matrix<T> tt_to_dense(const BasicTTOperator<T>& h);

/// <x|y>, conjugating x.
template <typename T>
T tt_inner(const BasicTTVector<T>& x, const BasicTTVector<T>& y);
template <typename T>
double tt_norm(const BasicTTVector<T>& x);

/// Frobenius inner product Tr(A^H B).
template <typename T>
T mpo_inner(const BasicTTOperator<T>& a, const BasicTTOperator<T>& b);
template <typename T>
double mpo_frobenius_norm(const BasicTTOperator<T>& h);

/// diag(f) as an MPO with the ranks of f.
template <typename T>
BasicTTOperator<T> diag_mpo_from_mps(const BasicTTVector<T>& f);

/// Exact MPO-MPS product; output bond ranks are products of input ranks.
template <typename T>
BasicTTVector<T> mpo_apply(const BasicTTOperator<T>& h, const BasicTTVector<T>& x);

/// Element-wise product, routed through diag_mpo_from_mps + mpo_apply.
template <typename T>
BasicTTVector<T> hadamard(const BasicTTVector<T>& x, const BasicTTVector<T>& y);

inline constexpr double kDefaultRoundTolerance = 1e-10;

/// Left-to-right QR orthogonalization followed by a right-to-left truncated
/// SVD sweep. Each bond discards the largest singular-value tail whose energy
/// is strictly below tol * ||x|| / sqrt(n - 1), so ||x - round(x)|| <= tol ||x||
/// unless `max_rank` binds.
template <typename T>
BasicTTVector<T> tt_round(const BasicTTVector<T>& x, double tol,
                          std::size_t max_rank = SIZE_MAX);

/// Result of the classical tensor-network power iteration.
template <typename T>
struct PowerIterationResult {
  BasicTTVector<T> state;
  /// Maximal bond rank after each application of H.
  std::vector<std::size_t> max_ranks;
};

/// Repeats x <- H x / ||H x|| `steps` times starting from f0 / ||f0||.
/// Without max_rank and tol the iterate is never rounded and ranks follow the
/// product law; otherwise tt_round(tol.value_or(0), max_rank) runs each step.
template <typename T>
PowerIterationResult<T> classical_power_iteration(
    const BasicTTOperator<T>& h, const BasicTTVector<T>& f0, std::size_t steps,
    std::optional<std::size_t> max_rank = std::nullopt,
    std::optional<double> tol = std::nullopt);

/// Rank-1 TT of the all-ones vector.
TTVector ones_tt(std::size_t n);
/// Identity operator as a rank-1 MPO.
TTOperator identity_mpo(std::size_t n);
/// Computational basis state |basis> on n qubits.
TTVector basis_state_tt(std::size_t n, std::uint64_t basis);

ComplexTTVector to_complex(const TTVector& x);
ComplexTTOperator to_complex(const TTOperator& h);

}  // namespace tnqpi
