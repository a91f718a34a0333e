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

#include "tnqpi/reports.hpp"

#include <charconv>

namespace tnqpi {

namespace {

std::string header(const char* kind, const char* columns) {
  return "# tnqpi " + std::string(kind) + " schema " + std::to_string(kReportSchemaVersion) +
         "\n" + columns + "\n";
}

std::string join_point(const Point& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ';';
    out += format_double(x[i]);
  }
  return out;
}

std::string join_index(const MultiIndex& k) {
  std::string out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(k[i]);
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string cross_trace_csv(const CrossResult& result) {
  std::string out = header("cross-trace", "sweep,evaluations,validation_error");
  for (const auto& row : result.trace) {
    out += std::to_string(row.sweep) + "," + std::to_string(row.evaluations) + "," +
           format_double(row.validation_error) + "\n";
  }
  return out;
}

std::string fit_report_csv(const FitReport& report) {
  std::string out = header("fit-report", "iteration,cost,c");
  for (std::size_t i = 0; i < report.cost_trace.size(); ++i) {
    out += std::to_string(i) + "," + format_double(report.cost_trace[i]) + "," +
           format_double(report.scale_trace[i]) + "\n";
  }
  return out;
}

std::string iteration_report_csv(const IterationReport& report, const Grid& grid) {
  std::string out = header("iteration-report", "k,x_k,p_k");
  for (std::size_t b = 0; b < report.distribution.size(); ++b) {
    const MultiIndex k = basis_to_multi_index(grid, b);
    out += join_index(k) + "," + join_point(index_to_point(grid, k)) + "," +
           format_double(report.distribution[b]) + "\n";
  }
  return out;
}

std::string iteration_summary_csv(const IterationReport& report, const Grid& grid) {
  std::string out =
      header("iteration-summary", "p,status,step_probabilities,cumulative_probability,k_star,point");
  std::string steps;
  for (std::size_t j = 0; j < report.step_probabilities.size(); ++j) {
    if (j) steps += ';';
    steps += format_double(report.step_probabilities[j]);
  }
  const MultiIndex k = basis_to_multi_index(grid, report.candidate);
  out += std::to_string(report.power) + ",ok," + steps + "," +
         format_double(report.cumulative_probability) + "," + join_index(k) + "," +
         join_point(index_to_point(grid, k)) + "\n";
  return out;
}

std::string dead_branch_summary_csv(std::size_t p) {
  return header("iteration-summary",
                "p,status,step_probabilities,cumulative_probability,k_star,point") +
         std::to_string(p) + ",dead-branch,,0,,\n";
}

std::string scan_table_csv(const ScanTable& table) {
  std::string out = header("n-scan", "n,p,exact,integral,literal_integral,discrepancy");
  for (const auto& r : table.rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.p) + "," + format_double(r.exact) + "," +
           format_double(r.integral) + "," + format_double(r.literal_integral) + "," +
           format_double(r.discrepancy) + "\n";
  }
  out += "# max_deviation " + format_double(table.max_deviation) + "\n";
  return out;
}

std::string rank_growth_csv(const std::vector<RankGrowthRow>& rows) {
  std::string out = header("rank-growth", "step,formal_rank,predicted_rank,dense_cap,rounded_rank");
  for (const auto& r : rows) {
    out += std::to_string(r.step) + "," + std::to_string(r.formal_rank) + "," +
           std::to_string(r.predicted_rank) + "," + std::to_string(r.dense_cap) + "," +
           std::to_string(r.rounded_rank) + "\n";
  }
  return out;
}

std::string timing_table_csv(const TimingTable& table) {
  std::string out = header("cost-timing", "n,R,seconds");
  for (const auto& r : table.rows) {
    out += std::to_string(table.num_qubits) + "," + std::to_string(r.ansatz_rank) + "," +
           format_double(r.seconds) + "\n";
  }
  out += "# log_log_slope " + format_double(table.log_log_slope) + "\n";
  return out;
}

}  // namespace tnqpi
