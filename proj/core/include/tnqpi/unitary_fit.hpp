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

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "tnqpi/tensor_train.hpp"
#include "tnqpi/unitary_mpo.hpp"

namespace tnqpi {

/// Normalized fitting cost J(U) = min_c ||c Ut - H||_F^2 / ||H||_F^2 and its
/// Euclidean gradient, everything by environment contraction in TT form.
class FitObjective {
 public:
  explicit FitObjective(const TTOperator& target);

  struct Evaluation {
    double cost = 0.0;
    /// Optimal real scale c* = Re<Ut, H> / ||Ut||^2.
    double scale = 0.0;
    /// dJ = Re tr(G^H dU) per gate; empty when not requested.
    std::vector<GateMatrix> gradient;
  };

  Evaluation evaluate(const UnitaryMPO& u, bool with_gradient = true) const;
  double cost(const UnitaryMPO& u) const { return evaluate(u, false).cost; }
  double target_norm2() const { return target_norm2_; }
  std::size_t num_qubits() const { return target_.num_qubits(); }

 private:
  ComplexTTOperator target_;
  double target_norm2_ = 0.0;
};

/// Projection onto the tangent space of the unitary group:
/// (G - U G^H U) / 2 for each gate.
std::vector<GateMatrix> riemannian_gradient(const UnitaryMPO& u,
                                            const std::vector<GateMatrix>& euclidean);

enum class FitInit {
  /// Seeded perturbation of the identity circuit.
  kNearIdentity,
  /// Seeded Haar-like random unitaries.
  kRandom,
};

struct FitConfig {
  std::size_t ansatz_rank = 2;
  double learning_rate = 0.02;
  std::size_t iterations = 10000;
  std::uint64_t seed = 0;
  FitInit init = FitInit::kNearIdentity;
  double init_spread = 1e-3;
  /// Explicit starting point; overrides `init`.
  std::optional<UnitaryMPO> initial;
  /// Compare the TT cost against a dense evaluation on every iterate (n <= 6).
  bool dense_spot_check = false;
  /// Consecutive step-size halvings tolerated after a non-finite cost.
  std::size_t max_halvings = 10;
};

struct FitReport {
  /// Normalized cost of iterate 0..iterations.
  std::vector<double> cost_trace;
  std::vector<double> scale_trace;
  double initial_cost = 0.0;
  double best_cost = 0.0;
  double final_cost = 0.0;
  double final_scale = 0.0;
  std::size_t iterations = 0;
  std::size_t best_iteration = 0;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  std::size_t lr_halvings = 0;
  bool aborted = false;
  double max_unitarity_defect = 0.0;
  /// Largest |TT cost - dense cost| seen with dense_spot_check.
  double max_dense_discrepancy = 0.0;
};

struct FitResult {
  UnitaryMPO best;
  FitReport report;
};

/// Riemannian gradient descent on the product of unitary groups with QR
/// retraction; c is re-solved in closed form every iteration and the best
/// iterate is returned with scale c set.
FitResult riemannian_fit(const TTOperator& target, const FitConfig& cfg);

/// sqrt of a normalized cost, i.e. ||c Ut - H||_F / ||H||_F.
inline double relative_fit_error(double normalized_cost) {
  return normalized_cost > 0.0 ? std::sqrt(normalized_cost) : 0.0;
}

}  // namespace tnqpi
