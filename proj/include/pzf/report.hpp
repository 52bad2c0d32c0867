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

#ifndef PZF_REPORT_HPP
#define PZF_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pzf/forcing.hpp"
#include "pzf/graph.hpp"
#include "pzf/harness.hpp"

namespace pzf {

enum class OutputFormat { csv, json, table };

OutputFormat parse_format(std::string_view text);
std::string to_string(OutputFormat format);

/// Which start vertex a command uses.
struct StartPolicy {
  enum class Kind { vertex, corner, center, min, all };
  Kind kind = Kind::vertex;
  Vertex vertex = 0;

  friend bool operator==(const StartPolicy&, const StartPolicy&) = default;
};

/// A vertex index, `corner`, `center`, `min` (default candidates) or `all`.
StartPolicy parse_start_policy(std::string_view text);
std::string to_string(const StartPolicy& policy);

struct RunConfig {
  GraphFamilySpec graph;
  ForcingRule rule = ForcingRule::standard();
  StartPolicy start;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  /// 0 selects 1000 * n_vertices.
  std::size_t max_steps = 0;
  OutputFormat format = OutputFormat::json;
  /// Tail horizon for `exact`; empty selects the automatic horizon.
  std::optional<std::size_t> t_max;
  /// Worker threads; 0 defers to PZF_THREADS. Not part of the serialised form.
  std::size_t threads = 0;

  friend bool operator==(const RunConfig& a, const RunConfig& b) {
    return a.graph == b.graph && a.rule == b.rule && a.start == b.start && a.trials == b.trials &&
           a.seed == b.seed && a.max_steps == b.max_steps && a.format == b.format &&
           a.t_max == b.t_max;
  }
};

nlohmann::json to_json(const RunConfig& config);
RunConfig run_config_from_json(const nlohmann::json& j);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);
/// Two decimals, ties to even.
std::string format_two_decimals(double x);

inline constexpr std::string_view kRunCsvHeader =
    "graph,rule,start,trials,seed,mean,variance,std_error,min,max,lower_bound,upper_bound";

struct BoundPair {
  std::optional<double> lower;
  std::optional<double> upper;
};
/// CSV bound columns for a run: the grid distance bound for grids and the
/// start eccentricity otherwise; the family's upper bound when one exists.
BoundPair run_bounds(const GraphFamilySpec& spec, const Graph& g, Vertex start);

/// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(std::string_view text);

std::string run_csv_row(const GraphFamilySpec& spec, const EptSummary& s, const BoundPair& b);

Vertex resolve_start(const StartPolicy& policy, const Graph& g, const GraphFamilySpec& spec);

/// Field/type check for command JSON output. Empty means valid.
std::vector<std::string> schema_errors(const nlohmann::json& j);

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_exact(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_profile(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bounds(const RunConfig& config, std::ostream& out, std::ostream& err);

enum class TableFamily { grid, hypercube };

struct TableConfig {
  TableFamily family = TableFamily::hypercube;
  /// Inclusive; empty when first > last.
  std::size_t first = 1;
  std::size_t last = 16;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  /// Grids only: `corner` or `center`.
  StartPolicy start{StartPolicy::Kind::corner, 0};
  OutputFormat format = OutputFormat::table;
  std::size_t threads = 0;
};

/// `a:b` or a single value.
std::pair<std::size_t, std::size_t> parse_range(std::string_view text);

/// Writes the two-decimal table (format table) or the CSV twin (format csv);
/// when csv_twin is non-null the CSV is also written there.
int cmd_table(const TableConfig& config, std::ostream& out, std::ostream& err,
              std::ostream* csv_twin = nullptr);

}  // namespace pzf

#endif  // PZF_REPORT_HPP
