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
#include <vector>

#include "tnqpi/grid.hpp"
#include "tnqpi/unitary_mpo.hpp"

namespace tnqpi {

inline constexpr std::size_t kMaxSimulatorQubits = 26;
inline constexpr double kDeadBranchThreshold = 1e-300;

/// Dense register of n system qubits and n_a ancillas. Amplitude of
/// |anc>|sys> lives at anc * 2^n + sys, so the ancilla-0 sector is the
/// leading 2^n entries. System qubit 0 is the most significant bit of sys.
class StateVector {
 public:
  StateVector(std::size_t n, std::size_t n_a);

  std::size_t num_system() const { return n_; }
  std::size_t num_ancillas() const { return n_a_; }
  std::size_t size() const { return amps_.size(); }
  std::vector<std::complex<double>>& amplitudes() { return amps_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  std::complex<double>& operator[](std::size_t i) { return amps_[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  /// Mass of the ancilla-0 sector.
  double sector_probability() const;

 private:
  std::size_t n_;
  std::size_t n_a_;
  std::vector<std::complex<double>> amps_;
};

/// |0>^{n_a} (x) |+>^{n}.
StateVector prepare_initial(std::size_t n, std::size_t n_a);

/// Applies gate k to (system qubit k, ancilla block) for k = 0..n-1.
StateVector apply_unitary_mpo(const StateVector& s, const UnitaryMPO& u);
void apply_unitary_mpo_inplace(StateVector& s, const UnitaryMPO& u);

struct PostselectResult {
  StateVector state;
  double probability = 0.0;
};

/// Projects onto the ancilla-0 sector and renormalizes.
PostselectResult postselect_ancillas(const StateVector& s);

struct IterationReport {
  std::size_t power = 0;
  std::size_t num_qubits = 0;
  std::vector<double> step_probabilities;
  double cumulative_probability = 1.0;
  /// p_k over system basis states, index 0-based.
  std::vector<double> distribution;
  /// argmax of the distribution, 0-based basis index, lowest index on ties.
  std::uint64_t candidate = 0;
};

/// p rounds of {reset ancillas, apply circuit, post-select}.
IterationReport power_iterate(const UnitaryMPO& u, std::size_t p);
/// Post-selected system state after p rounds.
std::vector<std::complex<double>> power_iterate_state(const UnitaryMPO& u, std::size_t p,
                                                      std::vector<double>* step_probabilities = nullptr);

struct Candidate {
  std::uint64_t basis = 0;
  MultiIndex index;
  Point point;
  double probability = 0.0;
};

std::uint64_t argmax_lowest(const std::vector<double>& values);
Candidate extract_candidate(const IterationReport& report, const Grid& grid);

/// Multinomial histogram over the 2^n outcomes.
std::vector<std::uint64_t> sample_measurements(const IterationReport& report, std::uint64_t shots,
                                               std::uint64_t seed);

}  // namespace tnqpi
