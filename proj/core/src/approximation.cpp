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

#include "tnqpi/approximation.hpp"

namespace tnqpi {

ApproximationResult approximate_objective(const Grid& grid, const ObjectiveSpec& spec,
                                          const CrossConfig& cfg) {
  std::vector<Point> samples;
  auto raw = tt_cross(
      [&](std::uint64_t basis) {
        Point x = basis_to_point(grid, basis);
        const double v = spec.evaluator(x);
        samples.push_back(std::move(x));
        return v;
      },
      grid.total_qubits(), cfg);
  ObjectiveSpec fixed = preprocess_objective(spec, samples);
  std::uint64_t clipped = 0;
  auto normalized = tt_cross(
      [&](std::uint64_t basis) {
        const auto v = fixed.normalize(fixed.evaluator(basis_to_point(grid, basis)));
        if (v.clipped) ++clipped;
        return v.value;
      },
      grid.total_qubits(), cfg);
  return {grid, std::move(fixed), std::move(raw), std::move(normalized), clipped};
}

std::vector<double> tabulate(const Grid& grid, const ObjectiveSpec& spec) {
  std::vector<double> out(grid.num_points());
  for (std::uint64_t b = 0; b < out.size(); ++b) {
    out[b] = spec.normalize(spec.evaluator(basis_to_point(grid, b))).value;
  }
  return out;
}

}  // namespace tnqpi
