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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_io.hpp"
#include "tnqpi/error.hpp"
#include "tnqpi/serialization.hpp"

namespace {

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> jobs;
  std::optional<std::string> benchmark;
  std::optional<std::size_t> rank;
  std::optional<std::size_t> ansatz_rank;
  std::vector<std::size_t> powers;
  std::optional<double> lr;
  std::optional<std::size_t> iters;
  std::optional<std::size_t> restarts;
};

void add_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "Run configuration (JSON)");
  cmd->add_option("--seed", o.seed, "Global seed");
  cmd->add_option("--out", o.out, "Existing output directory");
  cmd->add_option("--jobs", o.jobs, "Parallel restart jobs");
  cmd->add_option("--benchmark", o.benchmark, "sine, ackley or rosenbrock");
  cmd->add_option("--rank", o.rank, "Cross-approximation rank");
  cmd->add_option("--ansatz-rank", o.ansatz_rank, "Unitary MPO rank R (power of two)");
  cmd->add_option("--powers", o.powers, "Iteration powers")->delimiter(',');
  cmd->add_option("--lr", o.lr, "Learning rate");
  cmd->add_option("--iters", o.iters, "Fit iterations");
  cmd->add_option("--restarts", o.restarts, "Fit restarts");
}

tnqpi::cli::RunConfig build_config(const Overrides& o) {
  tnqpi::cli::RunConfig cfg;
  if (!o.config.empty()) cfg = tnqpi::cli::parse_run_config(tnqpi::read_file(o.config));
  if (o.seed) cfg.seed = *o.seed;
  if (o.out) cfg.out = *o.out;
  if (o.jobs) cfg.jobs = *o.jobs;
  if (o.benchmark) {
    cfg.benchmark = *o.benchmark;
    cfg.tabulated.reset();
  }
  if (o.rank) cfg.rank = *o.rank;
  if (o.ansatz_rank) cfg.fit.ansatz_rank = *o.ansatz_rank;
  if (!o.powers.empty()) cfg.powers = o.powers;
  if (o.lr) cfg.fit.learning_rate = *o.lr;
  if (o.iters) cfg.fit.iterations = *o.iters;
  if (o.restarts) cfg.fit.restarts = *o.restarts;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor-network quantum power iteration"};
  app.require_subcommand(1);
  Overrides o;
  using Command = void (*)(const tnqpi::cli::RunConfig&, std::ostream&);
  const std::vector<std::pair<std::string, Command>> commands = {
      {"approximate", tnqpi::cli::cmd_approximate},
      {"fit", tnqpi::cli::cmd_fit},
      {"iterate", tnqpi::cli::cmd_iterate},
      {"analyze", tnqpi::cli::cmd_analyze},
      {"pipeline", tnqpi::cli::cmd_pipeline},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, fn] : commands) {
    subs.push_back(app.add_subcommand(name));
    add_flags(subs.back(), o);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << tnqpi::cli::error_record("", "usage", e.what()) << "\n";
    return 2;
  }

  std::string name;
  Command fn = nullptr;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) {
      name = commands[i].first;
      fn = commands[i].second;
    }
  }
  try {
    fn(build_config(o), std::cout);
  } catch (const tnqpi::Error& e) {
    std::cerr << tnqpi::cli::error_record(name, std::string(tnqpi::error_code_name(e.code())), e.what())
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << tnqpi::cli::error_record(name, "internal", e.what()) << "\n";
    return 1;
  }
  return 0;
}
