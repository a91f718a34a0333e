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
#include <vector>

#include "tnqpi/cross.hpp"
#include "tnqpi/grid.hpp"
#include "tnqpi/tensor_train.hpp"

namespace tnqpi {

struct ApproximationResult {
  Grid grid;
  /// Objective with shift and scale fixed from the raw samples.
  ObjectiveSpec objective;
  /// Cross run on the raw objective, source of the normalization samples.
  CrossResult raw;
  /// Cross run on the preprocessed objective g.
  CrossResult normalized;
  /// Evaluations of g that fell outside [0, 1] and were clipped.
  std::uint64_t clipped = 0;
};

/// Runs cross on f to sample it, fixes C and s from those samples, then runs
/// cross on g with the same configuration.
ApproximationResult approximate_objective(const Grid& grid, const ObjectiveSpec& spec,
                                          const CrossConfig& cfg);

/// g on every lattice point, ordered by basis index.
std::vector<double> tabulate(const Grid& grid, const ObjectiveSpec& spec);

}  // namespace tnqpi
