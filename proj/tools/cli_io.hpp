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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tnqpi/cross.hpp"
#include "tnqpi/grid.hpp"

namespace tnqpi::cli {

inline constexpr int kRunConfigVersion = 1;

struct TabulatedSource {
  std::filesystem::path path;
  std::vector<DimensionSpec> dims;
  Direction direction = Direction::kMaximize;
};

struct FitSettings {
  std::size_t ansatz_rank = 2;
  double learning_rate = 0.02;
  std::size_t iterations = 10000;
  std::size_t restarts = 1;
  double init_spread = 1e-3;
};

struct AnalyzeSettings {
  std::vector<std::size_t> scan_qubits = {6, 8, 10};
  std::size_t scan_power = 1;
  std::size_t rank_steps = 3;
  std::size_t timing_qubits = 10;
  std::vector<std::size_t> timing_ranks = {2, 4, 8, 16};
  std::size_t timing_repeats = 5;
};

struct RunConfig {
  std::string benchmark = "sine";
  std::optional<TabulatedSource> tabulated;
  /// Overrides the benchmark's default domain and resolution.
  std::optional<std::vector<DimensionSpec>> grid;
  /// Cross rank; the benchmark default when absent.
  std::optional<std::size_t> rank;
  std::size_t sweeps = 4;
  std::size_t validation_samples = 256;
  double cross_tol = 1e-10;
  FitSettings fit;
  std::vector<std::size_t> powers = {1, 10, 50, 100};
  std::filesystem::path out = ".";
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  AnalyzeSettings analyze;
};

RunConfig parse_run_config(const std::string& text);
std::string to_run_config_text(const RunConfig& cfg);
/// Throws kInvalidArgument or kIo when the configuration is unusable.
void validate(const RunConfig& cfg);
CrossConfig cross_config(const RunConfig& cfg);
/// Seed used by restart `index`.
std::uint64_t restart_seed(std::uint64_t seed, std::size_t index);

struct ResolvedObjective {
  Grid grid;
  ObjectiveSpec spec;
};
/// Grid and raw objective named by the configuration.
ResolvedObjective resolve_objective(const RunConfig& cfg);

/// Each command writes into cfg.out, which must already exist, and refreshes
/// manifest.json. Progress lines go to `log`.
void cmd_approximate(const RunConfig& cfg, std::ostream& log);
void cmd_fit(const RunConfig& cfg, std::ostream& log);
void cmd_iterate(const RunConfig& cfg, std::ostream& log);
void cmd_analyze(const RunConfig& cfg, std::ostream& log);
void cmd_pipeline(const RunConfig& cfg, std::ostream& log);

std::string sha256_hex(std::string_view data);
/// Single-line JSON error record.
std::string error_record(const std::string& command, const std::string& code,
                         const std::string& message);

}  // namespace tnqpi::cli
