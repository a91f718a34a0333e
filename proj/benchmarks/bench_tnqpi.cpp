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

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tnqpi/benchmark_functions.hpp"
#include "tnqpi/cross.hpp"
#include "tnqpi/statevector.hpp"
#include "tnqpi/unitary_fit.hpp"
#include "tnqpi/unitary_mpo.hpp"

namespace {

using namespace tnqpi;

TTOperator sine_target(unsigned n) {
  return diag_mpo_from_mps(sine_mps(make_grid({{0.0, std::numbers::pi, n}})));
}

void BM_CostEvaluation(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const FitObjective obj(sine_target(10));
  std::mt19937_64 rng(0);
  const auto u = random_unitary_mpo(10, r, rng);
  for (auto _ : state) benchmark::DoNotOptimize(obj.evaluate(u, false).cost);
}
BENCHMARK(BM_CostEvaluation)->RangeMultiplier(2)->Range(2, 16)->Unit(benchmark::kMicrosecond);

void BM_CostAndGradient(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const FitObjective obj(sine_target(10));
  std::mt19937_64 rng(0);
  const auto u = random_unitary_mpo(10, r, rng);
  for (auto _ : state) benchmark::DoNotOptimize(obj.evaluate(u, true).gradient.data());
}
BENCHMARK(BM_CostAndGradient)->RangeMultiplier(2)->Range(2, 16)->Unit(benchmark::kMicrosecond);

void BM_ApplyUnitaryMpo(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(0);
  const auto u = random_unitary_mpo(n, 4, rng);
  StateVector s = prepare_initial(n, u.num_ancillas());
  for (auto _ : state) {
    apply_unitary_mpo_inplace(s, u);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_ApplyUnitaryMpo)->DenseRange(8, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_SineCross(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const Grid grid = make_grid({{0.0, std::numbers::pi, n}});
  CrossConfig cfg;
  cfg.max_rank = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tt_cross([&](std::uint64_t b) { return std::sin(basis_to_point(grid, b)[0]); }, n, cfg)
            .validation_error);
  }
}
BENCHMARK(BM_SineCross)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);

void BM_Round(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  const auto f = sine_mps(make_grid({{0.0, std::numbers::pi, 12}}));
  const auto grown = classical_power_iteration(diag_mpo_from_mps(f), f, steps).state;
  for (auto _ : state) benchmark::DoNotOptimize(tt_round(grown, 1e-10).max_rank());
}
BENCHMARK(BM_Round)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
