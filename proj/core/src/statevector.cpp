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

#include "tnqpi/statevector.hpp"

#include <cmath>
#include <random>
#include <string>

#include "tnqpi/error.hpp"

namespace tnqpi {

StateVector::StateVector(std::size_t n, std::size_t n_a) : n_(n), n_a_(n_a) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "state needs at least one system qubit");
  if (n + n_a > kMaxSimulatorQubits) {
    throw Error(ErrorCode::kSizeLimit,
                "statevector of " + std::to_string(n + n_a) + " qubits exceeds the limit");
  }
  amps_.assign(std::size_t{1} << (n + n_a), 0.0);
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

double StateVector::sector_probability() const {
  double acc = 0.0;
  const std::size_t dim = std::size_t{1} << n_;
  for (std::size_t i = 0; i < dim; ++i) acc += std::norm(amps_[i]);
  return acc;
}

StateVector prepare_initial(std::size_t n, std::size_t n_a) {
  StateVector s(n, n_a);
  const std::size_t dim = std::size_t{1} << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t i = 0; i < dim; ++i) s[i] = amp;
  return s;
}

void apply_unitary_mpo_inplace(StateVector& s, const UnitaryMPO& u) {
  const std::size_t n = s.num_system();
  if (u.num_qubits() != n || u.num_ancillas() != s.num_ancillas()) {
    throw Error(ErrorCode::kDimensionMismatch, "state layout does not match the unitary MPO");
  }
  const std::size_t r = u.ansatz_rank();
  const std::size_t dim = std::size_t{1} << n;
  Eigen::VectorXcd v(static_cast<Eigen::Index>(2 * r));
  Eigen::VectorXcd w(static_cast<Eigen::Index>(2 * r));
  auto& amps = s.amplitudes();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t bit = std::size_t{1} << (n - 1 - k);
    const auto& gate = u.gate(k);
    for (std::size_t sys = 0; sys < dim; ++sys) {
      if (sys & bit) continue;
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t a = 0; a < r; ++a)
          v(static_cast<Eigen::Index>(b * r + a)) = amps[a * dim + (sys | (b ? bit : 0))];
      w.noalias() = gate * v;
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t a = 0; a < r; ++a)
          amps[a * dim + (sys | (b ? bit : 0))] = w(static_cast<Eigen::Index>(b * r + a));
    }
  }
}

StateVector apply_unitary_mpo(const StateVector& s, const UnitaryMPO& u) {
  StateVector out = s;
  apply_unitary_mpo_inplace(out, u);
  return out;
}

namespace {

double postselect_inplace(StateVector& s) {
  const double p = s.sector_probability();
  if (!(p >= kDeadBranchThreshold)) {
    throw Error(ErrorCode::kDeadBranch, "post-selection probability below threshold");
  }
  const std::size_t dim = std::size_t{1} << s.num_system();
  const double inv = 1.0 / std::sqrt(p);
  auto& amps = s.amplitudes();
  for (std::size_t i = 0; i < dim; ++i) amps[i] *= inv;
  std::fill(amps.begin() + static_cast<std::ptrdiff_t>(dim), amps.end(), 0.0);
  return p;
}

}  // namespace

PostselectResult postselect_ancillas(const StateVector& s) {
  if (s.num_ancillas() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "post-selection needs at least one ancilla");
  }
  PostselectResult out{s, 0.0};
  out.probability = postselect_inplace(out.state);
  return out;
}

std::vector<std::complex<double>> power_iterate_state(const UnitaryMPO& u, std::size_t p,
                                                      std::vector<double>* step_probabilities) {
  StateVector s = prepare_initial(u.num_qubits(), u.num_ancillas());
  for (std::size_t j = 0; j < p; ++j) {
    apply_unitary_mpo_inplace(s, u);
    const double pj = postselect_inplace(s);
    if (step_probabilities) step_probabilities->push_back(pj);
  }
  const std::size_t dim = std::size_t{1} << u.num_qubits();
  return {s.amplitudes().begin(), s.amplitudes().begin() + static_cast<std::ptrdiff_t>(dim)};
}

std::uint64_t argmax_lowest(const std::vector<double>& values) {
  std::uint64_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

IterationReport power_iterate(const UnitaryMPO& u, std::size_t p) {
  IterationReport report;
  report.power = p;
  report.num_qubits = u.num_qubits();
  const auto psi = power_iterate_state(u, p, &report.step_probabilities);
  for (double pj : report.step_probabilities) report.cumulative_probability *= pj;
  report.distribution.resize(psi.size());
  double total = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    report.distribution[i] = std::norm(psi[i]);
    total += report.distribution[i];
  }
  for (auto& v : report.distribution) v /= total;
  report.candidate = argmax_lowest(report.distribution);
  return report;
}

Candidate extract_candidate(const IterationReport& report, const Grid& grid) {
  if (report.distribution.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty distribution");
  }
  if (report.distribution.size() != grid.num_points()) {
    throw Error(ErrorCode::kDimensionMismatch, "distribution size does not match the grid");
  }
  Candidate c;
  c.basis = argmax_lowest(report.distribution);
  c.index = basis_to_multi_index(grid, c.basis);
  c.point = index_to_point(grid, c.index);
  c.probability = report.distribution[c.basis];
  return c;
}

std::vector<std::uint64_t> sample_measurements(const IterationReport& report, std::uint64_t shots,
                                               std::uint64_t seed) {
  if (shots == 0) throw Error(ErrorCode::kInvalidArgument, "shots must be positive");
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> dist(report.distribution.begin(),
                                               report.distribution.end());
  std::vector<std::uint64_t> hist(report.distribution.size(), 0);
  for (std::uint64_t i = 0; i < shots; ++i) ++hist[dist(rng)];
  return hist;
}

}  // namespace tnqpi
