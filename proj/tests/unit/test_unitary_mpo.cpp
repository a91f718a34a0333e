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

#include "test_util.hpp"
#include "tnqpi/benchmark_functions.hpp"
#include "tnqpi/error.hpp"
#include "tnqpi/unitary_mpo.hpp"

namespace tnqpi {
namespace {

using testing::dense_block;

GateMatrix pauli_z() {
  GateMatrix z = GateMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

GateMatrix pauli_x() {
  GateMatrix x = GateMatrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

TTOperator z_string(std::size_t n, double scale = 1.0) {
  std::vector<Core3<double>> cores(n, Core3<double>(1, 1));
  for (auto& c : cores) c.data = {1.0, -1.0};
  cores[0].data = {scale, -scale};
  return diag_mpo_from_mps(TTVector(std::move(cores)));
}

TEST(UnitaryMPO, Validation) {
  EXPECT_THROW(UnitaryMPO({GateMatrix::Identity(6, 6)}, 3), Error);
  EXPECT_THROW(UnitaryMPO({GateMatrix::Identity(2, 2)}, 2), Error);
  const UnitaryMPO u({GateMatrix::Identity(4, 4)}, 2);
  EXPECT_EQ(u.num_ancillas(), 1u);
  EXPECT_EQ(u.gate_dim(), 4u);
}

TEST(UnitaryMPO, RandomGatesAreUnitary) {
  std::mt19937_64 rng(1);
  for (std::size_t r : {1, 2, 4, 8}) {
    const auto u = random_unitary_mpo(5, r, rng);
    EXPECT_LT(u.unitarity_defect(), 1e-12);
  }
}

TEST(QrRetract, PositiveDiagonal) {
  std::mt19937_64 rng(2);
  const GateMatrix a = random_unitary(6, rng) + 0.3 * GateMatrix::Identity(6, 6);
  const GateMatrix q = qr_retract(a);
  EXPECT_LT((q.adjoint() * q - GateMatrix::Identity(6, 6)).norm(), 1e-12);
  const GateMatrix r = q.adjoint() * a;
  for (int i = 0; i < 6; ++i) {
    EXPECT_GT(r(i, i).real(), 0.0);
    EXPECT_NEAR(r(i, i).imag(), 0.0, 1e-12);
  }
}

TEST(BoundaryContract, NoAncillaIsProductOfGates) {
  std::mt19937_64 rng(3);
  const auto u = random_unitary_mpo(4, 1, rng);
  const Eigen::MatrixXcd d = tt_to_dense(boundary_contract(u));
  Eigen::MatrixXcd kron = Eigen::MatrixXcd::Ones(1, 1);
  for (std::size_t k = 0; k < 4; ++k) {
    Eigen::MatrixXcd next(kron.rows() * 2, kron.cols() * 2);
    for (Eigen::Index i = 0; i < kron.rows(); ++i)
      for (Eigen::Index j = 0; j < kron.cols(); ++j)
        next.block(2 * i, 2 * j, 2, 2) = kron(i, j) * u.gate(k);
    kron = next;
  }
  EXPECT_LT((d - kron).norm(), 1e-12);
  EXPECT_LT((d.adjoint() * d - Eigen::MatrixXcd::Identity(16, 16)).norm(), 1e-12);
}

TEST(BoundaryContract, IdentityGates) {
  const auto d = tt_to_dense(boundary_contract(identity_unitary_mpo(4, 4)));
  EXPECT_LT((d - Eigen::MatrixXcd::Identity(16, 16)).norm(), 1e-14);
}

TEST(BoundaryContract, MatchesCircuitBlock) {
  std::mt19937_64 rng(4);
  for (std::size_t r : {2, 4}) {
    const auto u = random_unitary_mpo(4, r, rng);
    const auto ut = boundary_contract(u);
    EXPECT_LE(ut.max_rank(), r);
    EXPECT_LT((tt_to_dense(ut) - dense_block(u)).norm(), 1e-12);
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(tt_to_dense(ut));
    EXPECT_LE(svd.singularValues()(0), 1.0 + 1e-12);
  }
}

TEST(FrobeniusCost, ExactUnitaryDiagonal) {
  const UnitaryMPO u(std::vector<GateMatrix>(5, pauli_z()), 1);
  const auto h = z_string(5);
  EXPECT_NEAR(frobenius_cost(u, 1.0, h), 0.0, 1e-12);
  EXPECT_NEAR(frobenius_cost(u, 0.0, h), std::pow(mpo_frobenius_norm(h), 2), 1e-12);
}

TEST(FrobeniusCost, MatchesDense) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto u = random_unitary_mpo(n, 2, rng);
    const auto h = testing::random_mpo(n, 3, rng);
    const double c = 0.7;
    const double dense = (c * dense_block(u) - tt_to_dense(h).cast<cplx>()).squaredNorm();
    EXPECT_NEAR(frobenius_cost(u, c, h), dense, 1e-10 * (1 + dense));
  }
}

TEST(FrobeniusCost, DimensionMismatch) {
  EXPECT_THROW(frobenius_cost(identity_unitary_mpo(3, 2), 1.0, identity_mpo(4)), Error);
}

TEST(OptimalScale, Homogeneity) {
  const UnitaryMPO u(std::vector<GateMatrix>(4, pauli_z()), 1);
  EXPECT_NEAR(optimal_scale(u, z_string(4, 2.0)), 2.0, 1e-12);
}

TEST(OptimalScale, Orthogonal) {
  const UnitaryMPO u(std::vector<GateMatrix>(4, pauli_x()), 1);
  EXPECT_NEAR(optimal_scale(u, identity_mpo(4)), 0.0, 1e-12);
}

TEST(OptimalScale, LocalMinimum) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; ++i) {
    const auto u = random_unitary_mpo(5, 2, rng);
    const auto h = testing::random_mpo(5, 2, rng);
    const double c = optimal_scale(u, h);
    EXPECT_LE(frobenius_cost(u, c, h), frobenius_cost(u, c + 0.01, h));
    EXPECT_LE(frobenius_cost(u, c, h), frobenius_cost(u, c - 0.01, h));
  }
}

TEST(OptimalScale, ZeroBlock) {
  // Each gate flips the ancilla, so the ancilla-0 block vanishes.
  GateMatrix flip = GateMatrix::Zero(4, 4);
  flip(1, 0) = flip(0, 1) = flip(3, 2) = flip(2, 3) = 1.0;
  const UnitaryMPO u(std::vector<GateMatrix>(3, flip), 2);
  try {
    optimal_scale(u, identity_mpo(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroNorm);
  }
}

TEST(Completion, UnitaryInputUnchanged) {
  const auto u = unitary_completion(z_string(4));
  EXPECT_EQ(u.ansatz_rank(), 1u);
  EXPECT_NEAR(u.scale(), 1.0, 1e-12);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_LT((u.gate(k) - pauli_z()).norm(), 1e-12);
}

TEST(Completion, SineIsExact) {
  const Grid grid = make_grid({{0.0, std::numbers::pi, 8}});
  const auto h = diag_mpo_from_mps(sine_mps(grid));
  const auto u = unitary_completion(h);
  EXPECT_EQ(u.ansatz_rank(), 2u);
  EXPECT_LT(u.unitarity_defect(), 1e-12);
  const Eigen::MatrixXcd d = u.scale() * tt_to_dense(boundary_contract(u));
  EXPECT_LT((d - tt_to_dense(h).cast<cplx>()).norm(), 1e-12);
  EXPECT_NEAR(frobenius_cost(u, u.scale(), h), 0.0, 1e-20);
}

TEST(Completion, RandomIsometries) {
  std::mt19937_64 rng(7);
  const std::vector<std::size_t> r{1, 2, 2, 2, 1};
  std::vector<Core4<cplx>> cores;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t rows = 2 * r[k + 1];
    const std::size_t cols = 2 * r[k];
    const GateMatrix q = random_unitary(std::max(rows, cols), rng);
    const GateMatrix v = rows >= cols ? GateMatrix(q.leftCols(cols).topRows(rows))
                                      : GateMatrix(q.topRows(rows).leftCols(cols));
    Core4<cplx> c(r[k], r[k + 1]);
    for (std::size_t a = 0; a < r[k]; ++a)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
          for (std::size_t b = 0; b < r[k + 1]; ++b)
            c(a, s, t, b) = v(static_cast<Eigen::Index>(s * r[k + 1] + b),
                              static_cast<Eigen::Index>(t * r[k] + a));
    cores.push_back(c);
  }
  const ComplexTTOperator h(std::move(cores));
  const auto u = unitary_completion(h);
  EXPECT_LT(u.unitarity_defect(), 1e-12);
  EXPECT_LT((u.scale() * dense_block(u) - tt_to_dense(h)).norm(), 1e-12);
}

TEST(Completion, RejectsNonIsometric) {
  std::mt19937_64 rng(8);
  const auto h = testing::random_mpo(4, 2, rng);
  try {
    unitary_completion(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonIsometric);
  }
}

TEST(GateCount, Formula) {
  const auto e = gate_count_estimate(10, 4);
  EXPECT_EQ(e.cnot_estimate, 160u);
  EXPECT_EQ(e.lower_bound_per_gate, 64u);
  EXPECT_EQ(gate_count_estimate(10, 1).lower_bound_per_gate, 4u);
  EXPECT_EQ(gate_count_estimate(7, 8).cnot_estimate, 4 * gate_count_estimate(7, 4).cnot_estimate);
  EXPECT_THROW(gate_count_estimate(4, 3), Error);
}

}  // namespace
}  // namespace tnqpi
