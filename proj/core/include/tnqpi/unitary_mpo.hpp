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

#include <cstdint>
#include <random>
#include <vector>

#include "tnqpi/tensor_train.hpp"

namespace tnqpi {

using GateMatrix = Eigen::MatrixXcd;

/// Step-like circuit of n gates on log2(R) + 1 qubits each, plus the scale c
/// that multiplies its ancilla-projected block.
///
/// Gate k acts on system qubit k and the shared ancilla block. Its basis index
/// is `system_bit * R + ancilla`. Gates are applied in order k = 0..n-1.
class UnitaryMPO {
 public:
  UnitaryMPO() = default;
  /// Throws kInvalidArgument unless R is a power of two and every gate is
  /// 2R x 2R.
  UnitaryMPO(std::vector<GateMatrix> gates, std::size_t ansatz_rank, double scale = 1.0);

  std::size_t num_qubits() const { return gates_.size(); }
  std::size_t ansatz_rank() const { return rank_; }
  std::size_t num_ancillas() const { return ancillas_; }
  std::size_t gate_dim() const { return 2 * rank_; }
  double scale() const { return scale_; }
  void set_scale(double c) { scale_ = c; }

  const std::vector<GateMatrix>& gates() const { return gates_; }
  const GateMatrix& gate(std::size_t k) const { return gates_[k]; }
  GateMatrix& gate(std::size_t k) { return gates_[k]; }

  /// max_k ||U_k^H U_k - 1||_F
  double unitarity_defect() const;

  bool operator==(const UnitaryMPO&) const = default;

 private:
  std::vector<GateMatrix> gates_;
  std::size_t rank_ = 1;
  std::size_t ancillas_ = 0;
  double scale_ = 1.0;
};

bool is_power_of_two(std::size_t v);

/// Haar-like random unitary: QR of a complex Gaussian matrix with the
/// positive-diagonal convention on R.
GateMatrix random_unitary(std::size_t dim, std::mt19937_64& rng);
/// Q factor of A = QR with diag(R) real positive.
GateMatrix qr_retract(const GateMatrix& a);

UnitaryMPO random_unitary_mpo(std::size_t n, std::size_t ansatz_rank, std::mt19937_64& rng);
/// QR retraction of 1 + spread * (complex Gaussian) per gate.
UnitaryMPO near_identity_unitary_mpo(std::size_t n, std::size_t ansatz_rank, double spread,
                                     std::mt19937_64& rng);
UnitaryMPO identity_unitary_mpo(std::size_t n, std::size_t ansatz_rank);

/// Ancilla-projected block (<0| (x) 1) U (1 (x) |0>) as an MPO whose bonds
/// are the ancilla register: core_k(a, s, t, b) = U_k(s R + b, t R + a).
ComplexTTOperator boundary_contract(const UnitaryMPO& u);

/// ||c * Ut - H||_F^2 evaluated entirely in TT form.
double frobenius_cost(const UnitaryMPO& u, double c, const TTOperator& h);
/// Real c minimizing frobenius_cost for fixed U: Re<Ut, H> / ||Ut||^2.
double optimal_scale(const UnitaryMPO& u, const TTOperator& h);

/// Extends isometric MPO cores to a unitary MPO. Each core may carry a
/// scalar factor; the product of these factors becomes the scale c, so that
/// c * boundary_contract(result) reproduces `h`. Cores 0..n-2 must be column
/// isometries over (input bit, left bond); the last core must have
/// orthonormal rows over (output bit). Throws kNonIsometric otherwise.
UnitaryMPO unitary_completion(const TTOperator& h, double tol = 1e-10);
UnitaryMPO unitary_completion(const ComplexTTOperator& h, double tol = 1e-10);

struct GateCountEstimate {
  /// n R^2 scaling estimate with unit constant.
  std::uint64_t cnot_estimate;
  /// 4^m with m = log2(R) + 1 qubits per gate.
  std::uint64_t lower_bound_per_gate;
};

GateCountEstimate gate_count_estimate(std::size_t n, std::size_t ansatz_rank);

}  // namespace tnqpi
