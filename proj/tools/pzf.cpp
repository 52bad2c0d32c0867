// Copyright 2026 The pzf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pzf: probabilistic zero forcing simulator.
//
//   pzf run     --graph hypercube:4 --rule standard --start 0 --trials 10000 --seed 7
//   pzf exact   --graph cycle:4 --start 0
//   pzf table   --family grid --range 2:14 --trials 1000 --csv grid.csv
//   pzf profile --graph hypercube:8 --trials 1000
//   pzf bounds  --graph cliquering:5,60

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pzf/report.hpp"

namespace {

struct RawConfig {
  std::string graph;
  std::string rule = "standard";
  std::string start = "0";
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t max_steps = 0;
  std::string format;
  std::optional<std::size_t> t_max;
  std::size_t threads = 0;
};

void add_common(CLI::App* cmd, RawConfig& raw, const std::string& default_format,
                bool simulation) {
  cmd->add_option("--graph", raw.graph, "family:params, e.g. grid:4,5 or file:edges.txt")
      ->required();
  cmd->add_option("--rule", raw.rule, "standard | constant:P | push | pull | pushpull | classic")
      ->capture_default_str();
  cmd->add_option("--start", raw.start, "vertex index | corner | center | min | all")
      ->capture_default_str();
  cmd->add_option("--format", raw.format, "csv | json | table")->default_str(default_format);
  if (simulation) {
    cmd->add_option("--trials", raw.trials, "number of trials")->capture_default_str();
    cmd->add_option("--seed", raw.seed, "master seed")->capture_default_str();
    cmd->add_option("--max-steps", raw.max_steps, "step cutoff per trial (0 = 1000 n)")
        ->capture_default_str();
    cmd->add_option("--threads", raw.threads, "worker threads (0 = PZF_THREADS or all cores)");
  }
}

pzf::RunConfig build(const RawConfig& raw, const std::string& default_format) {
  pzf::RunConfig c;
  c.graph = pzf::parse_graph_spec(raw.graph);
  c.rule = pzf::parse_rule(raw.rule);
  c.start = pzf::parse_start_policy(raw.start);
  c.trials = raw.trials;
  c.seed = raw.seed;
  c.max_steps = raw.max_steps;
  c.format = pzf::parse_format(raw.format.empty() ? default_format : raw.format);
  c.t_max = raw.t_max;
  c.threads = raw.threads;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic zero forcing: simulation, exact analysis and bounds"};
  app.require_subcommand(1);

  RawConfig run_raw, exact_raw, profile_raw, bounds_raw;
  auto* run = app.add_subcommand("run", "Monte Carlo estimate of the expected propagation time");
  add_common(run, run_raw, "json", true);

  auto* exact = app.add_subcommand("exact", "Exact expected propagation time on small graphs");
  add_common(exact, exact_raw, "json", false);
  exact->add_option("--t-max", exact_raw.t_max, "tail horizon (default: until P(T > t) < 1e-12)");

  auto* profile = app.add_subcommand("profile", "Steps spent per doubling level of the blue set");
  add_common(profile, profile_raw, "json", true);

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for a graph family");
  add_common(bounds, bounds_raw, "json", false);

  auto* table = app.add_subcommand("table", "Tables of simulated means over a family range");
  std::string family = "hypercube";
  std::string range;
  std::string table_start = "corner";
  std::string table_format = "table";
  std::string csv_path;
  pzf::TableConfig table_config;
  table->add_option("--family", family, "grid | hypercube")->capture_default_str();
  table->add_option("--range", range, "first:last (default 2:14 for grids, 1:16 for hypercubes)");
  table->add_option("--trials", table_config.trials, "trials per cell")->capture_default_str();
  table->add_option("--seed", table_config.seed, "master seed")->capture_default_str();
  table->add_option("--start", table_start, "grid start: corner | center")->capture_default_str();
  table->add_option("--format", table_format, "table | csv")->capture_default_str();
  table->add_option("--csv", csv_path, "also write the CSV twin to this path");
  table->add_option("--threads", table_config.threads, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return pzf::cmd_run(build(run_raw, "json"), std::cout, std::cerr);
    if (*exact) return pzf::cmd_exact(build(exact_raw, "json"), std::cout, std::cerr);
    if (*profile) return pzf::cmd_profile(build(profile_raw, "json"), std::cout, std::cerr);
    if (*bounds) return pzf::cmd_bounds(build(bounds_raw, "json"), std::cout, std::cerr);
    if (*table) {
      if (family == "grid") {
        table_config.family = pzf::TableFamily::grid;
        std::tie(table_config.first, table_config.last) =
            pzf::parse_range(range.empty() ? "2:14" : range);
      } else if (family == "hypercube") {
        table_config.family = pzf::TableFamily::hypercube;
        std::tie(table_config.first, table_config.last) =
            pzf::parse_range(range.empty() ? "1:16" : range);
      } else {
        std::cerr << "error: unknown table family '" << family << "'\n";
        return 1;
      }
      table_config.start = pzf::parse_start_policy(table_start);
      table_config.format = pzf::parse_format(table_format);
      std::ofstream csv;
      if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) {
          std::cerr << "error: cannot write " << csv_path << "\n";
          return 1;
        }
      }
      return pzf::cmd_table(table_config, std::cout, std::cerr, csv_path.empty() ? nullptr : &csv);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
