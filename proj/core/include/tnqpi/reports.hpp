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

#include <string>
#include <vector>

#include "tnqpi/analysis.hpp"
#include "tnqpi/cross.hpp"
#include "tnqpi/grid.hpp"
#include "tnqpi/statevector.hpp"
#include "tnqpi/unitary_fit.hpp"

namespace tnqpi {

inline constexpr int kReportSchemaVersion = 1;

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

std::string cross_trace_csv(const CrossResult& result);
std::string fit_report_csv(const FitReport& report);
/// Per-outcome rows (k, x_k, p_k) with 1-based lattice indices.
std::string iteration_report_csv(const IterationReport& report, const Grid& grid);
/// Single-record summary: p, P_j list, cumulative probability, k*, point.
std::string iteration_summary_csv(const IterationReport& report, const Grid& grid);
/// Summary record for a power whose post-selection died.
std::string dead_branch_summary_csv(std::size_t p);
std::string scan_table_csv(const ScanTable& table);
std::string rank_growth_csv(const std::vector<RankGrowthRow>& rows);
std::string timing_table_csv(const TimingTable& table);

}  // namespace tnqpi
