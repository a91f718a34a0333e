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

#include "cli_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "tnqpi/analysis.hpp"
#include "tnqpi/approximation.hpp"
#include "tnqpi/benchmark_functions.hpp"
#include "tnqpi/error.hpp"
#include "tnqpi/reports.hpp"
#include "tnqpi/serialization.hpp"
#include "tnqpi/statevector.hpp"
#include "tnqpi/unitary_fit.hpp"

namespace tnqpi::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kConfigFile = "config.json";
constexpr const char* kDiscretizationFile = "discretization.json";
constexpr const char* kMpsFile = "mps.tt";
constexpr const char* kUnitaryFile = "umpo.bin";
constexpr const char* kManifestFile = "manifest.json";

Direction parse_direction(const std::string& s) {
  if (s == "maximize") return Direction::kMaximize;
  if (s == "minimize") return Direction::kMinimize;
  throw Error(ErrorCode::kFormat, "unknown direction '" + s + "'");
}

const char* direction_name(Direction d) {
  return d == Direction::kMaximize ? "maximize" : "minimize";
}

std::vector<DimensionSpec> parse_dims(const json& j) {
  std::vector<DimensionSpec> dims;
  for (const auto& d : j) {
    const auto& dom = d.at("domain");
    dims.push_back({dom.at(0).get<double>(), dom.at(1).get<double>(),
                    d.at("qubits").get<unsigned>()});
  }
  return dims;
}

json dims_json(const std::vector<DimensionSpec>& dims) {
  json out = json::array();
  for (const auto& d : dims) out.push_back({{"domain", {d.lower, d.upper}}, {"qubits", d.qubits}});
  return out;
}

template <typename T>
void read_opt(const json& j, const char* key, T& dst) {
  if (j.contains(key)) dst = j.at(key).get<T>();
}

void write_text(const fs::path& path, const std::string& text) { write_file_atomic(path, text); }

void refresh_manifest(const fs::path& dir) {
  std::map<std::string, fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (name == kManifestFile || name.ends_with(".tmp")) continue;
    files.emplace(name, entry.path());
  }
  json m;
  m["version"] = 1;
  m["files"] = json::object();
  for (const auto& [name, path] : files) {
    const std::string data = read_file(path);
    m["files"][name] = {{"sha256", sha256_hex(data)}, {"bytes", data.size()}};
  }
  write_text(dir / kManifestFile, m.dump(2) + "\n");
}

void require_out_dir(const RunConfig& cfg) {
  std::error_code ec;
  if (!fs::is_directory(cfg.out, ec)) {
    throw Error(ErrorCode::kIo, "output directory '" + cfg.out.string() + "' does not exist");
  }
}

ObjectiveSpec objective_for_run(const RunConfig& cfg, const ResolvedObjective& obj) {
  const fs::path disc = cfg.out / kDiscretizationFile;
  std::error_code ec;
  if (fs::exists(disc, ec)) {
    const auto d = parse_config_text(read_file(disc));
    if (!(d.grid == obj.grid)) {
      throw Error(ErrorCode::kDimensionMismatch, "stored discretization does not match the grid");
    }
    ObjectiveSpec spec = obj.spec;
    spec.shift = d.shift;
    spec.scale = d.scale;
    spec.degenerate = d.degenerate;
    return spec;
  }
  std::vector<Point> samples;
  samples.reserve(obj.grid.num_points());
  for (std::uint64_t b = 0; b < obj.grid.num_points(); ++b) {
    samples.push_back(basis_to_point(obj.grid, b));
  }
  return preprocess_objective(obj.spec, samples);
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("run config: ") + e.what());
  }
  RunConfig cfg;
  try {
    if (j.contains("version") && j.at("version").get<int>() != kRunConfigVersion) {
      throw Error(ErrorCode::kFormat, "unsupported run config version");
    }
    read_opt(j, "benchmark", cfg.benchmark);
    if (j.contains("tabulated")) {
      const auto& t = j.at("tabulated");
      TabulatedSource src;
      src.path = t.at("path").get<std::string>();
      src.dims = parse_dims(t.at("dims"));
      if (t.contains("direction")) src.direction = parse_direction(t.at("direction"));
      cfg.tabulated = std::move(src);
    }
    if (j.contains("grid")) cfg.grid = parse_dims(j.at("grid"));
    if (j.contains("cross")) {
      const auto& c = j.at("cross");
      if (c.contains("rank")) cfg.rank = c.at("rank").get<std::size_t>();
      read_opt(c, "sweeps", cfg.sweeps);
      read_opt(c, "validation_samples", cfg.validation_samples);
      read_opt(c, "tol", cfg.cross_tol);
    }
    if (j.contains("fit")) {
      const auto& f = j.at("fit");
      read_opt(f, "ansatz_rank", cfg.fit.ansatz_rank);
      read_opt(f, "lr", cfg.fit.learning_rate);
      read_opt(f, "iters", cfg.fit.iterations);
      read_opt(f, "restarts", cfg.fit.restarts);
      read_opt(f, "init_spread", cfg.fit.init_spread);
    }
    read_opt(j, "powers", cfg.powers);
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    read_opt(j, "seed", cfg.seed);
    read_opt(j, "jobs", cfg.jobs);
    if (j.contains("analyze")) {
      const auto& a = j.at("analyze");
      read_opt(a, "scan_qubits", cfg.analyze.scan_qubits);
      read_opt(a, "scan_power", cfg.analyze.scan_power);
      read_opt(a, "rank_steps", cfg.analyze.rank_steps);
      read_opt(a, "timing_qubits", cfg.analyze.timing_qubits);
      read_opt(a, "timing_ranks", cfg.analyze.timing_ranks);
      read_opt(a, "timing_repeats", cfg.analyze.timing_repeats);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("run config: ") + e.what());
  }
  return cfg;
}

std::string to_run_config_text(const RunConfig& cfg) {
  json j;
  j["version"] = kRunConfigVersion;
  j["benchmark"] = cfg.benchmark;
  if (cfg.tabulated) {
    j["tabulated"] = {{"path", cfg.tabulated->path.string()},
                      {"dims", dims_json(cfg.tabulated->dims)},
                      {"direction", direction_name(cfg.tabulated->direction)}};
  }
  if (cfg.grid) j["grid"] = dims_json(*cfg.grid);
  json cross = {{"sweeps", cfg.sweeps},
                {"validation_samples", cfg.validation_samples},
                {"tol", cfg.cross_tol}};
  if (cfg.rank) cross["rank"] = *cfg.rank;
  j["cross"] = cross;
  j["fit"] = {{"ansatz_rank", cfg.fit.ansatz_rank},
              {"lr", cfg.fit.learning_rate},
              {"iters", cfg.fit.iterations},
              {"restarts", cfg.fit.restarts},
              {"init_spread", cfg.fit.init_spread}};
  j["powers"] = cfg.powers;
  j["out"] = cfg.out.string();
  j["seed"] = cfg.seed;
  j["jobs"] = cfg.jobs;
  j["analyze"] = {{"scan_qubits", cfg.analyze.scan_qubits},
                  {"scan_power", cfg.analyze.scan_power},
                  {"rank_steps", cfg.analyze.rank_steps},
                  {"timing_qubits", cfg.analyze.timing_qubits},
                  {"timing_ranks", cfg.analyze.timing_ranks},
                  {"timing_repeats", cfg.analyze.timing_repeats}};
  return j.dump(2) + "\n";
}

void validate(const RunConfig& cfg) {
  if (cfg.tabulated) {
    std::error_code ec;
    if (!fs::is_regular_file(cfg.tabulated->path, ec)) {
      throw Error(ErrorCode::kIo, "tabulated objective '" + cfg.tabulated->path.string() +
                                      "' does not exist");
    }
  } else {
    find_benchmark(cfg.benchmark);
  }
  if (!is_power_of_two(cfg.fit.ansatz_rank)) {
    throw Error(ErrorCode::kInvalidArgument, "ansatz rank must be a power of two");
  }
  if (!(cfg.fit.learning_rate > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "learning rate must be positive");
  }
  if (cfg.fit.restarts == 0) throw Error(ErrorCode::kInvalidArgument, "restarts must be positive");
  if (cfg.rank && *cfg.rank == 0) throw Error(ErrorCode::kInvalidArgument, "rank must be positive");
  if (cfg.jobs == 0) throw Error(ErrorCode::kInvalidArgument, "jobs must be positive");
}

CrossConfig cross_config(const RunConfig& cfg) {
  CrossConfig c;
  c.max_rank = cfg.rank ? *cfg.rank
                        : (cfg.tabulated ? 2 : find_benchmark(cfg.benchmark).default_rank);
  c.n_sweeps = cfg.sweeps;
  c.validation_sample_count = cfg.validation_samples;
  c.seed = cfg.seed;
  c.tol = cfg.cross_tol;
  return c;
}

std::uint64_t restart_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 of (seed, index)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ResolvedObjective resolve_objective(const RunConfig& cfg) {
  if (cfg.tabulated) {
    Grid grid = make_grid(cfg.tabulated->dims);
    auto table = std::make_shared<TabulatedObjective>(
        parse_tabulated_objective(read_file(cfg.tabulated->path), grid));
    if (table->size() != grid.num_points()) {
      throw Error(ErrorCode::kFormat, "tabulated objective does not cover every lattice point");
    }
    ObjectiveSpec spec;
    spec.evaluator = [table](std::span<const double> x) { return (*table)(x); };
    spec.direction = cfg.tabulated->direction;
    return {std::move(grid), std::move(spec)};
  }
  const Benchmark& b = find_benchmark(cfg.benchmark);
  Grid grid = make_grid(cfg.grid ? *cfg.grid : b.domain);
  if (grid.num_dims() != b.dimension) {
    throw Error(ErrorCode::kDimensionMismatch, "grid dimension does not match the benchmark");
  }
  ObjectiveSpec spec;
  spec.evaluator = b.evaluator;
  spec.direction = b.direction;
  return {std::move(grid), std::move(spec)};
}

void cmd_approximate(const RunConfig& cfg, std::ostream& log) {
  validate(cfg);
  require_out_dir(cfg);
  const auto obj = resolve_objective(cfg);
  const auto result = approximate_objective(obj.grid, obj.spec, cross_config(cfg));

  write_text(cfg.out / kConfigFile, to_run_config_text(cfg));
  DiscretizationConfig disc{obj.grid, result.objective.direction, result.objective.shift,
                            result.objective.scale, result.objective.degenerate};
  write_text(cfg.out / kDiscretizationFile, to_config_text(disc));
  write_text(cfg.out / kMpsFile, encode_tt(result.normalized.tt));
  write_text(cfg.out / "cross_trace.csv", cross_trace_csv(result.normalized));
  refresh_manifest(cfg.out);

  log << "approximate: ranks " << join_sizes(result.normalized.tt.ranks())
      << " validation_error " << format_double(result.normalized.validation_error)
      << " evaluations " << result.normalized.evaluations << "\n";
  if (result.objective.degenerate) log << "warning: objective is constant on the sampled points\n";
  if (result.clipped) log << "warning: " << result.clipped << " samples clipped into [0, 1]\n";
}

void cmd_fit(const RunConfig& cfg, std::ostream& log) {
  validate(cfg);
  require_out_dir(cfg);
  const auto mps = decode_tt<TTVector>(read_file(cfg.out / kMpsFile));
  const TTOperator target = diag_mpo_from_mps(mps);

  const std::size_t restarts = cfg.fit.restarts;
  std::vector<std::optional<FitResult>> results(restarts);
  std::vector<std::exception_ptr> errors(restarts);
  std::size_t next = 0;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next >= restarts) return;
        i = next++;
      }
      FitConfig fc;
      fc.ansatz_rank = cfg.fit.ansatz_rank;
      fc.learning_rate = cfg.fit.learning_rate;
      fc.iterations = cfg.fit.iterations;
      fc.init_spread = cfg.fit.init_spread;
      fc.seed = restart_seed(cfg.seed, i);
      try {
        results[i] = riemannian_fit(target, fc);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(cfg.jobs, restarts);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::size_t best = 0;
  for (std::size_t i = 1; i < restarts; ++i) {
    if (results[i]->report.best_cost < results[best]->report.best_cost) best = i;
  }
  std::string table = "# tnqpi fit-restarts schema 1\nrestart,seed,initial_cost,best_cost,best_iteration,aborted\n";
  bool all_aborted = true;
  for (std::size_t i = 0; i < restarts; ++i) {
    const auto& r = results[i]->report;
    all_aborted = all_aborted && r.aborted;
    table += std::to_string(i) + "," + std::to_string(r.seed) + "," + format_double(r.initial_cost) +
             "," + format_double(r.best_cost) + "," + std::to_string(r.best_iteration) + "," +
             (r.aborted ? "1" : "0") + "\n";
  }
  const FitResult& chosen = *results[best];
  write_text(cfg.out / kUnitaryFile, encode_unitary_mpo(chosen.best));
  write_text(cfg.out / "fit_report.csv", fit_report_csv(chosen.report));
  write_text(cfg.out / "fit_restarts.csv", table);
  refresh_manifest(cfg.out);

  log << "fit: R " << cfg.fit.ansatz_rank << " best restart " << best << " cost "
      << format_double(chosen.report.best_cost) << " relative_error "
      << format_double(relative_fit_error(chosen.report.best_cost)) << " c "
      << format_double(chosen.report.final_scale) << "\n";
  if (all_aborted) log << "warning: every restart stopped after repeated step-size halvings\n";
}

void cmd_iterate(const RunConfig& cfg, std::ostream& log) {
  validate(cfg);
  require_out_dir(cfg);
  const auto u = decode_unitary_mpo(read_file(cfg.out / kUnitaryFile));
  const auto disc = parse_config_text(read_file(cfg.out / kDiscretizationFile));
  if (disc.grid.total_qubits() != u.num_qubits()) {
    throw Error(ErrorCode::kDimensionMismatch, "unitary MPO does not match the stored grid");
  }
  for (std::size_t p : cfg.powers) {
    const std::string stem = "iteration_p" + std::to_string(p);
    try {
      const auto report = power_iterate(u, p);
      write_text(cfg.out / (stem + ".csv"), iteration_report_csv(report, disc.grid));
      write_text(cfg.out / (stem + "_summary.csv"), iteration_summary_csv(report, disc.grid));
      const auto c = extract_candidate(report, disc.grid);
      log << "iterate: p " << p << " cumulative " << format_double(report.cumulative_probability)
          << " k*";
      for (auto k : c.index) log << " " << k;
      log << " x*";
      for (double x : c.point) log << " " << format_double(x);
      log << " p_k* " << format_double(c.probability) << "\n";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDeadBranch) throw;
      write_text(cfg.out / (stem + "_summary.csv"), dead_branch_summary_csv(p));
      log << "iterate: p " << p << " dead branch\n";
    }
  }
  refresh_manifest(cfg.out);
}

void cmd_analyze(const RunConfig& cfg, std::ostream& log) {
  validate(cfg);
  require_out_dir(cfg);
  const auto obj = resolve_objective(cfg);
  const ObjectiveSpec spec = objective_for_run(cfg, obj);

  if (obj.grid.num_dims() == 1) {
    const auto& d = obj.grid.dims()[0];
    const ScalarFunction g = [&spec](double x) { return spec(std::span<const double>(&x, 1)); };
    const auto scan = n_independence_scan(g, d.lower, d.upper, cfg.analyze.scan_power,
                                          cfg.analyze.scan_qubits);
    write_text(cfg.out / "scan.csv", scan_table_csv(scan));
    log << "analyze: scan p " << cfg.analyze.scan_power << " max_deviation "
        << format_double(scan.max_deviation) << "\n";
  } else {
    log << "analyze: success-probability scan skipped for a " << obj.grid.num_dims()
        << "-dimensional grid\n";
  }

  TTVector mps;
  std::error_code ec;
  if (fs::exists(cfg.out / kMpsFile, ec)) {
    mps = decode_tt<TTVector>(read_file(cfg.out / kMpsFile));
  } else {
    mps = approximate_objective(obj.grid, obj.spec, cross_config(cfg)).normalized.tt;
  }
  const auto growth = rank_growth_report(diag_mpo_from_mps(mps), mps, cfg.analyze.rank_steps);
  write_text(cfg.out / "rank_growth.csv", rank_growth_csv(growth));
  log << "analyze: rank growth";
  for (const auto& row : growth) log << " " << row.formal_rank;
  log << "\n";

  std::string gates = "# tnqpi gate-counts schema 1\nn,R,cnot_estimate,lower_bound_per_gate\n";
  for (std::size_t r : cfg.analyze.timing_ranks) {
    const auto est = gate_count_estimate(obj.grid.total_qubits(), r);
    gates += std::to_string(obj.grid.total_qubits()) + "," + std::to_string(r) + "," +
             std::to_string(est.cnot_estimate) + "," + std::to_string(est.lower_bound_per_gate) +
             "\n";
  }
  write_text(cfg.out / "gate_counts.csv", gates);

  const auto timing = time_cost_evaluation(cfg.analyze.timing_qubits, cfg.analyze.timing_ranks,
                                           cfg.analyze.timing_repeats, cfg.seed);
  write_text(cfg.out / "timing.csv", timing_table_csv(timing));
  log << "analyze: cost-evaluation log-log slope " << format_double(timing.log_log_slope) << "\n";
  refresh_manifest(cfg.out);
}

void cmd_pipeline(const RunConfig& cfg, std::ostream& log) {
  cmd_approximate(cfg, log);
  cmd_fit(cfg, log);
  cmd_iterate(cfg, log);
  cmd_analyze(cfg, log);
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIo, "sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string error_record(const std::string& command, const std::string& code,
                         const std::string& message) {
  json j = {{"status", "error"}, {"command", command}, {"code", code}, {"message", message}};
  return j.dump();
}

}  // namespace tnqpi::cli
