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

#include "pzf/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pzf/bounds.hpp"
#include "pzf/exact.hpp"

namespace pzf {

using nlohmann::json;

namespace {

std::string lower(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return s;
}

bool vertex_transitive(const GraphFamilySpec& spec) {
  return spec.family == GraphFamily::hypercube || spec.family == GraphFamily::cycle ||
         spec.family == GraphFamily::complete;
}

json optional_number(const std::optional<double>& x) {
  if (!x || !std::isfinite(*x)) return nullptr;
  return *x;
}

json summary_json(const EptSummary& s) {
  return {{"start_vertex", s.start_vertex}, {"rule", to_string(s.rule)},
          {"seed", s.seed},                 {"trials", s.trials},
          {"terminated", s.terminated()},   {"cutoff", s.cutoff},
          {"mean", s.mean},                 {"variance", s.variance},
          {"std_error", s.std_error},       {"min_time", s.min_time},
          {"max_time", s.max_time}};
}

json bound_json(const BoundReport& b) {
  return {{"name", b.name},
          {"value", optional_number(b.value)},
          {"applicability", b.applicability},
          {"applicable", b.applicable},
          {"asymptotic", b.asymptotic},
          {"note", b.note}};
}

json advisory_json(const GraphFamilySpec& spec, double mean) {
  json a = json::object();
  if (spec.family == GraphFamily::hypercube) {
    a["mean_minus_dim"] = mean - static_cast<double>(spec.params[0]);
  } else if (spec.family == GraphFamily::grid) {
    a["mean_over_m_plus_n"] = mean / static_cast<double>(spec.params[0] + spec.params[1]);
  }
  return a;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace

OutputFormat parse_format(std::string_view text) {
  const auto s = lower(text);
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "table") return OutputFormat::table;
  throw std::invalid_argument("unknown output format '" + std::string(text) + "'");
}

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::table: return "table";
  }
  return "?";
}

StartPolicy parse_start_policy(std::string_view text) {
  const auto s = lower(text);
  if (s == "corner") return {StartPolicy::Kind::corner, 0};
  if (s == "center" || s == "centre") return {StartPolicy::Kind::center, 0};
  if (s == "min") return {StartPolicy::Kind::min, 0};
  if (s == "all" || s == "min-over-all") return {StartPolicy::Kind::all, 0};
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad start policy '" + std::string(text) + "'");
  }
  return {StartPolicy::Kind::vertex, v};
}

std::string to_string(const StartPolicy& policy) {
  switch (policy.kind) {
    case StartPolicy::Kind::vertex: return std::to_string(policy.vertex);
    case StartPolicy::Kind::corner: return "corner";
    case StartPolicy::Kind::center: return "center";
    case StartPolicy::Kind::min: return "min";
    case StartPolicy::Kind::all: return "all";
  }
  return "?";
}

json to_json(const RunConfig& c) {
  return {{"graph", to_string(c.graph)},
          {"rule", to_string(c.rule)},
          {"start", to_string(c.start)},
          {"trials", c.trials},
          {"seed", c.seed},
          {"max_steps", c.max_steps},
          {"format", to_string(c.format)},
          {"t_max", c.t_max ? json(*c.t_max) : json(nullptr)}};
}

namespace {

std::uint64_t count_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) {
    throw std::invalid_argument(std::string("config field ") + key + " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  c.graph = parse_graph_spec(j.at("graph").get<std::string>());
  c.rule = parse_rule(j.at("rule").get<std::string>());
  c.start = parse_start_policy(j.at("start").get<std::string>());
  c.trials = count_field(j, "trials");
  c.seed = count_field(j, "seed");
  c.max_steps = count_field(j, "max_steps");
  c.format = parse_format(j.at("format").get<std::string>());
  if (j.contains("t_max") && !j.at("t_max").is_null()) c.t_max = count_field(j, "t_max");
  return c;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_two_decimals(double x) {
  const double scaled = x * 100.0;
  double rounded = std::nearbyint(scaled);
  // Decimal ties such as 2.325 are not exact in binary; snap them to even.
  const double fl = std::floor(scaled);
  if (std::abs(scaled - fl - 0.5) < 1e-9) rounded = std::fmod(fl, 2.0) == 0.0 ? fl : fl + 1.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", rounded / 100.0);
  return buf;
}

BoundPair run_bounds(const GraphFamilySpec& spec, const Graph& g, Vertex start) {
  BoundPair b;
  if (spec.family == GraphFamily::grid) {
    auto gb = grid_bounds(spec.params[0], spec.params[1]);
    b.lower = gb.lower.value;
    b.upper = gb.upper.value;
    return b;
  }
  const std::size_t ecc = eccentricity(g, start);
  if (ecc != kInfinite) b.lower = static_cast<double>(ecc);
  switch (spec.family) {
    case GraphFamily::hypercube:
      b.upper = hypercube_upper_bound(spec.params[0]).value;
      break;
    case GraphFamily::clique_ring:
      b.upper = regular_upper_bound(g.n_vertices(), spec.params[0]).value;
      break;
    default:
      break;
  }
  return b;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string run_csv_row(const GraphFamilySpec& spec, const EptSummary& s, const BoundPair& b) {
  auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string(); };
  std::ostringstream row;
  row << csv_field(to_string(spec)) << ',' << csv_field(to_string(s.rule)) << ',' << s.start_vertex << ',' << s.trials
      << ',' << s.seed << ',' << format_double(s.mean) << ',' << format_double(s.variance) << ','
      << format_double(s.std_error) << ',' << s.min_time << ',' << s.max_time << ','
      << opt(b.lower) << ',' << opt(b.upper);
  return row.str();
}

Vertex resolve_start(const StartPolicy& policy, const Graph& g, const GraphFamilySpec& spec) {
  switch (policy.kind) {
    case StartPolicy::Kind::vertex:
      if (policy.vertex >= g.n_vertices()) {
        throw std::invalid_argument("start vertex " + std::to_string(policy.vertex) +
                                    " out of range");
      }
      return policy.vertex;
    case StartPolicy::Kind::corner:
    case StartPolicy::Kind::min:
    case StartPolicy::Kind::all:
      return 0;
    case StartPolicy::Kind::center:
      if (vertex_transitive(spec)) return 0;
      if (spec.family == GraphFamily::grid) {
        const std::size_t m = spec.params[0];
        const std::size_t n = spec.params[1];
        return static_cast<Vertex>((m - 1) / 2 + m * ((n - 1) / 2));
      }
      return center_vertex(g);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Schema

std::vector<std::string> schema_errors(const json& j) {
  std::vector<std::string> errors;
  if (!j.is_object()) return {"top level is not an object"};
  auto need = [&](const json& obj, const std::string& key, auto check, const char* type,
                  const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
      errors.push_back(where + key + " missing");
    } else if (!check(obj.at(key))) {
      errors.push_back(where + key + " is not " + type);
    }
  };
  auto is_string = [](const json& v) { return v.is_string(); };
  auto is_uint = [](const json& v) { return v.is_number_unsigned(); };
  auto is_number = [](const json& v) { return v.is_number(); };
  auto is_number_or_null = [](const json& v) { return v.is_number() || v.is_null(); };
  auto is_array = [](const json& v) { return v.is_array(); };
  auto is_object = [](const json& v) { return v.is_object(); };
  auto is_bool = [](const json& v) { return v.is_boolean(); };

  auto check_summary = [&](const json& s, const std::string& where) {
    need(s, "start_vertex", is_uint, "an unsigned integer", where);
    need(s, "rule", is_string, "a string", where);
    need(s, "seed", is_uint, "an unsigned integer", where);
    need(s, "trials", is_uint, "an unsigned integer", where);
    need(s, "terminated", is_uint, "an unsigned integer", where);
    need(s, "cutoff", is_uint, "an unsigned integer", where);
    need(s, "mean", is_number, "a number", where);
    need(s, "variance", is_number, "a number", where);
    need(s, "std_error", is_number, "a number", where);
    need(s, "min_time", is_uint, "an unsigned integer", where);
    need(s, "max_time", is_uint, "an unsigned integer", where);
  };

  need(j, "command", is_string, "a string", "");
  if (!errors.empty()) return errors;
  const auto command = j.at("command").get<std::string>();
  need(j, "graph", is_string, "a string", "");
  need(j, "n_vertices", is_uint, "an unsigned integer", "");
  if (command == "run") {
    need(j, "config", is_object, "an object", "");
    need(j, "summary", is_object, "an object", "");
    need(j, "bounds", is_object, "an object", "");
    need(j, "advisory", is_object, "an object", "");
    if (j.contains("summary")) check_summary(j.at("summary"), "summary.");
    if (j.contains("bounds")) {
      need(j.at("bounds"), "lower_bound", is_number_or_null, "a number or null", "bounds.");
      need(j.at("bounds"), "upper_bound", is_number_or_null, "a number or null", "bounds.");
    }
    if (j.contains("candidates")) {
      if (!j.at("candidates").is_array()) {
        errors.push_back("candidates is not an array");
      } else {
        for (const auto& c : j.at("candidates")) check_summary(c, "candidates[].");
      }
    }
  } else if (command == "exact") {
    need(j, "rule", is_string, "a string", "");
    need(j, "start_vertex", is_uint, "an unsigned integer", "");
    need(j, "expected_time", is_number, "a number", "");
    need(j, "tail", is_array, "an array", "");
    need(j, "states", is_uint, "an unsigned integer", "");
    need(j, "transitions", is_uint, "an unsigned integer", "");
    if (j.contains("expected_time_rational")) {
      need(j, "expected_time_rational", is_string, "a string", "");
    }
  } else if (command == "profile") {
    need(j, "config", is_object, "an object", "");
    need(j, "start_vertex", is_uint, "an unsigned integer", "");
    need(j, "blue_phase", is_array, "an array", "");
    need(j, "white_phase", is_array, "an array", "");
    need(j, "final_vertex_mean", is_number, "a number", "");
    need(j, "mean_propagation_time", is_number, "a number", "");
    need(j, "total", is_number, "a number", "");
    for (const char* phase : {"blue_phase", "white_phase"}) {
      if (!j.contains(phase) || !j.at(phase).is_array()) continue;
      for (const auto& l : j.at(phase)) {
        const std::string where = std::string(phase) + "[].";
        need(l, "level", is_uint, "an unsigned integer", where);
        need(l, "mean_steps", is_number, "a number", where);
        need(l, "visits", is_uint, "an unsigned integer", where);
        need(l, "conditional_mean", is_number, "a number", where);
        need(l, "bound", is_number_or_null, "a number or null", where);
      }
    }
  } else if (command == "bounds") {
    need(j, "bounds", is_array, "an array", "");
    if (j.contains("bounds") && j.at("bounds").is_array()) {
      for (const auto& b : j.at("bounds")) {
        need(b, "name", is_string, "a string", "bounds[].");
        need(b, "value", is_number_or_null, "a number or null", "bounds[].");
        need(b, "applicability", is_string, "a string", "bounds[].");
        need(b, "applicable", is_bool, "a boolean", "bounds[].");
        need(b, "asymptotic", is_bool, "a boolean", "bounds[].");
        need(b, "note", is_string, "a string", "bounds[].");
      }
    }
  } else {
    errors.push_back("unknown command '" + command + "'");
  }
  return errors;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = make_named_graph(config.graph);
    HarnessOptions options{config.max_steps, config.threads};
    std::vector<EptSummary> rows;
    EptSummary best;
    const bool many =
        config.start.kind == StartPolicy::Kind::min || config.start.kind == StartPolicy::Kind::all;
    if (many) {
      std::vector<Vertex> candidates;
      if (config.start.kind == StartPolicy::Kind::all) {
        for (Vertex v = 0; v < g.n_vertices(); ++v) candidates.push_back(v);
      } else {
        candidates = default_start_candidates(g, &config.graph);
      }
      auto result = estimate_ept_min_over_starts(g, candidates, config.rule, config.trials,
                                                 config.seed, options);
      best = result.best_summary();
      rows = result.candidates;
    } else {
      best = estimate_ept(g, resolve_start(config.start, g, config.graph), config.rule,
                          config.trials, config.seed, options);
      rows = {best};
    }
    if (best.cutoff > 0) {
      err << "warning: " << best.cutoff << " of " << best.trials
          << " trials hit the step cutoff; mean is over terminated trials\n";
    }
    const BoundPair bounds = run_bounds(config.graph, g, best.start_vertex);

    switch (config.format) {
      case OutputFormat::csv:
        out << kRunCsvHeader << "\n";
        for (const auto& r : rows) {
          out << run_csv_row(config.graph, r, run_bounds(config.graph, g, r.start_vertex)) << "\n";
        }
        break;
      case OutputFormat::json: {
        json j = {{"command", "run"},
                  {"config", to_json(config)},
                  {"graph", to_string(config.graph)},
                  {"n_vertices", g.n_vertices()},
                  {"summary", summary_json(best)},
                  {"bounds",
                   {{"lower_bound", optional_number(bounds.lower)},
                    {"upper_bound", optional_number(bounds.upper)}}},
                  {"advisory", advisory_json(config.graph, best.mean)}};
        if (many) {
          j["candidates"] = json::array();
          for (const auto& r : rows) j["candidates"].push_back(summary_json(r));
        }
        write_json(out, j);
        break;
      }
      case OutputFormat::table:
        out << "graph        " << to_string(config.graph) << "\n"
            << "rule         " << to_string(config.rule) << "\n";
        for (const auto& r : rows) {
          out << "start " << std::setw(6) << r.start_vertex << " mean " << format_double(r.mean)
              << " +- " << format_double(r.std_error) << " (trials " << r.trials << ", min "
              << r.min_time << ", max " << r.max_time << ")\n";
        }
        if (many) out << "best start   " << best.start_vertex << "\n";
        break;
    }
    return 0;
  });
}

int cmd_exact(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = make_named_graph(config.graph);
    ExactOptions options;
    if (config.t_max) options.t_max_cap = *config.t_max;
    Vertex start = 0;
    ExactResult result;
    if (config.start.kind == StartPolicy::Kind::min || config.start.kind == StartPolicy::Kind::all) {
      std::tie(start, result) = exact_ept_min_over_starts(g, config.rule, options);
    } else {
      start = resolve_start(config.start, g, config.graph);
      result = exact_ept(g, VertexSet(g.n_vertices(), std::span<const Vertex>(&start, 1)),
                         config.rule, options);
    }
    switch (config.format) {
      case OutputFormat::json: {
        json j = {{"command", "exact"},
                  {"graph", to_string(config.graph)},
                  {"n_vertices", g.n_vertices()},
                  {"rule", to_string(config.rule)},
                  {"start_vertex", start},
                  {"expected_time", result.expected_time},
                  {"tail", result.tail},
                  {"states", result.states},
                  {"transitions", result.transitions}};
        if (result.expected_time_rational) j["expected_time_rational"] = *result.expected_time_rational;
        write_json(out, j);
        break;
      }
      case OutputFormat::csv:
        out << "t,p_exceed\n";
        for (std::size_t t = 0; t < result.tail.size(); ++t) {
          out << t << ',' << format_double(result.tail[t]) << "\n";
        }
        break;
      case OutputFormat::table:
        out << "graph          " << to_string(config.graph) << "\n"
            << "rule           " << to_string(config.rule) << "\n"
            << "start          " << start << "\n"
            << "expected time  " << format_double(result.expected_time);
        if (result.expected_time_rational) out << " (" << *result.expected_time_rational << ")";
        out << "\nstates         " << result.states << "\n";
        break;
    }
    return 0;
  });
}

int cmd_profile(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = make_named_graph(config.graph);
    const Vertex start = resolve_start(config.start, g, config.graph);
    const auto profile = doubling_profile(g, start, config.rule, config.trials, config.seed,
                                          {config.max_steps, config.threads});
    const bool hypercube = config.graph.family == GraphFamily::hypercube;
    auto level_bound = [&](std::size_t k) -> std::optional<double> {
      if (!hypercube) return std::nullopt;
      auto b = hypercube_level_bound(config.graph.params[0], k);
      return b.applicable ? std::optional<double>(b.value) : std::nullopt;
    };
    auto levels_json = [&](const std::vector<DoublingLevel>& levels) {
      json arr = json::array();
      for (const auto& l : levels) {
        arr.push_back({{"level", l.level},
                       {"mean_steps", l.mean_steps},
                       {"visits", l.visits},
                       {"conditional_mean", l.conditional_mean},
                       {"bound", optional_number(level_bound(l.level))}});
      }
      return arr;
    };
    switch (config.format) {
      case OutputFormat::json:
        write_json(out, {{"command", "profile"},
                         {"config", to_json(config)},
                         {"graph", to_string(config.graph)},
                         {"n_vertices", g.n_vertices()},
                         {"start_vertex", start},
                         {"trials", profile.trials},
                         {"cutoff", profile.cutoff},
                         {"blue_phase", levels_json(profile.blue_phase)},
                         {"white_phase", levels_json(profile.white_phase)},
                         {"final_vertex_mean", profile.final_vertex_mean},
                         {"mean_propagation_time", profile.mean_propagation_time},
                         {"total", profile.total()}});
        break;
      case OutputFormat::csv:
      case OutputFormat::table: {
        const bool csv = config.format == OutputFormat::csv;
        if (csv) out << "phase,level,mean_steps,visits,conditional_mean,bound\n";
        auto emit = [&](const char* phase, const std::vector<DoublingLevel>& levels) {
          for (const auto& l : levels) {
            auto b = level_bound(l.level);
            if (csv) {
              out << phase << ',' << l.level << ',' << format_double(l.mean_steps) << ','
                  << l.visits << ',' << format_double(l.conditional_mean) << ','
                  << (b ? format_double(*b) : "") << "\n";
            } else {
              out << phase << " level " << l.level << ": mean " << format_two_decimals(l.mean_steps)
                  << ", conditional " << format_two_decimals(l.conditional_mean);
              if (b) out << ", bound " << format_two_decimals(*b);
              out << "\n";
            }
          }
        };
        emit("blue", profile.blue_phase);
        emit("white", profile.white_phase);
        if (csv) {
          out << "final,0," << format_double(profile.final_vertex_mean) << ','
              << profile.final_vertex_visits << ",,\n";
        } else {
          out << "final vertex: mean " << format_two_decimals(profile.final_vertex_mean) << "\n"
              << "total " << format_two_decimals(profile.total()) << " vs mean propagation time "
              << format_two_decimals(profile.mean_propagation_time) << "\n";
        }
        break;
      }
    }
    return 0;
  });
}

int cmd_bounds(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = make_named_graph(config.graph);
    const auto bounds = bounds_for(config.graph, g);
    switch (config.format) {
      case OutputFormat::json: {
        json arr = json::array();
        for (const auto& b : bounds) arr.push_back(bound_json(b));
        write_json(out, {{"command", "bounds"},
                         {"graph", to_string(config.graph)},
                         {"n_vertices", g.n_vertices()},
                         {"bounds", arr}});
        break;
      }
      case OutputFormat::csv:
        out << "name,value,applicable,asymptotic\n";
        for (const auto& b : bounds) {
          out << b.name << ',' << format_double(b.value) << ',' << (b.applicable ? 1 : 0) << ','
              << (b.asymptotic ? 1 : 0) << "\n";
        }
        break;
      case OutputFormat::table:
        for (const auto& b : bounds) {
          out << std::left << std::setw(20) << b.name << format_double(b.value)
              << (b.asymptotic ? "  (asymptotic)" : "") << (b.applicable ? "" : "  (not applicable)")
              << (b.note.empty() ? "" : "  " + b.note) << "\n";
        }
        break;
    }
    return 0;
  });
}

// ---------------------------------------------------------------------------
// Tables

std::pair<std::size_t, std::size_t> parse_range(std::string_view text) {
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("bad range '" + std::string(text) + "'");
    }
    return v;
  };
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    auto v = number(text);
    return {v, v};
  }
  return {number(text.substr(0, colon)), number(text.substr(colon + 1))};
}

int cmd_table(const TableConfig& config, std::ostream& out, std::ostream& err,
              std::ostream* csv_twin) {
  return guarded(err, [&] {
    HarnessOptions options{0, config.threads};
    std::ostringstream csv;
    std::ostringstream table;
    const std::size_t lo = config.first;
    const std::size_t hi = config.last;

    if (config.family == TableFamily::hypercube) {
      csv << "dim,start,trials,seed,mean,std_error,lower_bound,upper_bound,mean_minus_dim\n";
      table << std::setw(4) << "n" << std::setw(8) << "ept" << "\n";
      for (std::size_t dim = lo; dim <= hi && lo <= hi; ++dim) {
        const Graph g = make_hypercube(dim);
        const auto s = estimate_ept(g, 0, ForcingRule::standard(), config.trials, config.seed, options);
        csv << dim << ",0," << s.trials << ',' << s.seed << ',' << format_double(s.mean) << ','
            << format_double(s.std_error) << ',' << dim << ','
            << format_double(hypercube_upper_bound(dim).value) << ','
            << format_double(s.mean - static_cast<double>(dim)) << "\n";
        table << std::setw(4) << dim << std::setw(8) << format_two_decimals(s.mean) << "\n";
      }
    } else {
      if (config.start.kind != StartPolicy::Kind::corner &&
          config.start.kind != StartPolicy::Kind::center) {
        throw std::invalid_argument("grid tables take --start corner or center");
      }
      csv << "m,n,start,trials,seed,mean,std_error,lower_bound,upper_bound,mean_over_m_plus_n\n";
      const std::size_t count = lo <= hi ? hi - lo + 1 : 0;
      // Grids m x n and n x m are isomorphic; each unordered pair is simulated once.
      std::vector<EptSummary> cells(count * count);
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a; b < count; ++b) {
          const std::size_t m = lo + a, n = lo + b;
          const GraphFamilySpec spec{GraphFamily::grid, {m, n}, {}};
          const Graph g = make_grid(m, n);
          const Vertex start = resolve_start(config.start, g, spec);
          cells[a * count + b] =
              estimate_ept(g, start, ForcingRule::standard(), config.trials, config.seed, options);
          cells[b * count + a] = cells[a * count + b];
        }
      }
      table << std::setw(4) << "ept";
      for (std::size_t b = 0; b < count; ++b) table << std::setw(7) << lo + b;
      table << "\n";
      for (std::size_t a = 0; a < count; ++a) {
        table << std::setw(4) << lo + a;
        for (std::size_t b = 0; b < count; ++b) {
          const std::size_t m = lo + a, n = lo + b;
          const auto& s = cells[a * count + b];
          const auto gb = grid_bounds(m, n);
          table << std::setw(7) << format_two_decimals(s.mean);
          csv << m << ',' << n << ',' << to_string(config.start) << ',' << s.trials << ','
              << s.seed << ',' << format_double(s.mean) << ',' << format_double(s.std_error) << ','
              << format_double(gb.lower.value) << ',' << format_double(gb.upper.value) << ','
              << format_double(s.mean / static_cast<double>(m + n)) << "\n";
        }
        table << "\n";
      }
    }

    if (config.format == OutputFormat::csv) {
      out << csv.str();
    } else if (config.format == OutputFormat::table) {
      out << table.str();
    } else {
      throw std::invalid_argument("tables are written as table or csv");
    }
    if (csv_twin) *csv_twin << csv.str();
    return 0;
  });
}

}  // namespace pzf
