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


#include <doctest.h>

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pzf/report.hpp"

using namespace pzf;
using nlohmann::json;

namespace {

RunConfig config(const std::string& graph, const std::string& start, std::size_t trials,
                 std::uint64_t seed, OutputFormat format) {
  RunConfig c;
  c.graph = parse_graph_spec(graph);
  c.start = parse_start_policy(start);
  c.trials = trials;
  c.seed = seed;
  c.format = format;
  return c;
}

struct Captured {
  int code;
  std::string out;
  std::string err;
};

template <class Cmd, class Config>
Captured capture(Cmd cmd, const Config& c) {
  std::ostringstream out, err;
  const int code = cmd(c, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("run CSV matches the golden file") {
  auto grid = capture(cmd_run, config("grid:2,2", "corner", 1000, 1, OutputFormat::csv));
  CHECK(grid.code == 0);
  auto cube = capture(cmd_run, config("hypercube:3", "0", 500, 3, OutputFormat::csv));
  CHECK(cube.code == 0);
  CHECK(grid.out.substr(0, grid.out.find('\n')) == kRunCsvHeader);
  CHECK(grid.out + cube.out == read_file(std::string(PZF_GOLDEN_DIR) + "/run.csv"));
}

TEST_CASE("CSV fields") {
  CHECK(csv_field("standard") == "standard");
  CHECK(csv_field("grid:2,2") == "\"grid:2,2\"");
  CHECK(csv_field("a\"b") == "\"a\"\"b\"");
}

TEST_CASE("run JSON validates and re-parses to the same numbers") {
  const auto c = config("hypercube:4", "0", 2000, 7, OutputFormat::json);
  auto r = capture(cmd_run, c);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(schema_errors(j).empty());
  const auto s = estimate_ept(make_hypercube(4), 0, ForcingRule::standard(), 2000, 7);
  CHECK(j["summary"]["mean"].get<double>() == s.mean);
  CHECK(j["summary"]["variance"].get<double>() == s.variance);
  CHECK(j["summary"]["std_error"].get<double>() == s.std_error);
  CHECK(j["bounds"]["lower_bound"].get<double>() == 4.0);
  CHECK(j["advisory"]["mean_minus_dim"].get<double>() == s.mean - 4.0);
  CHECK(run_config_from_json(j["config"]) == c);

  auto min = capture(cmd_run, config("grid:3,3", "min", 300, 1, OutputFormat::json));
  const json jm = json::parse(min.out);
  CHECK(schema_errors(jm).empty());
  CHECK(jm["candidates"].size() == 3);

  json broken = j;
  broken["summary"].erase("mean");
  broken["n_vertices"] = "sixteen";
  CHECK(schema_errors(broken).size() == 2);
}

TEST_CASE("other commands emit valid JSON") {
  auto exact = capture(cmd_exact, config("cycle:4", "0", 1, 1, OutputFormat::json));
  REQUIRE(exact.code == 0);
  const json je = json::parse(exact.out);
  CHECK(schema_errors(je).empty());
  CHECK(je["expected_time"].get<double>() == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
  CHECK(je["expected_time_rational"] == "7/3");

  auto profile = capture(cmd_profile, config("hypercube:6", "0", 500, 2, OutputFormat::json));
  REQUIRE(profile.code == 0);
  const json jp = json::parse(profile.out);
  CHECK(schema_errors(jp).empty());
  CHECK(std::abs(jp["total"].get<double>() - jp["mean_propagation_time"].get<double>()) < 1e-9);

  auto bounds = capture(cmd_bounds, config("cliquering:5,60", "0", 1, 1, OutputFormat::json));
  REQUIRE(bounds.code == 0);
  CHECK(schema_errors(json::parse(bounds.out)).empty());
}

TEST_CASE("exit codes") {
  auto budget = capture(cmd_exact, config("hypercube:10", "0", 1, 1, OutputFormat::json));
  CHECK(budget.code == 2);
  CHECK(budget.out.empty());
  CHECK(budget.err.rfind("error: ", 0) == 0);

  auto bad_start = capture(cmd_run, config("path:3", "7", 10, 1, OutputFormat::json));
  CHECK(bad_start.code == 1);
  CHECK_FALSE(bad_start.err.empty());

  auto push = config("path:3", "0", 10, 1, OutputFormat::json);
  push.rule = ForcingRule::push();
  CHECK(capture(cmd_exact, push).code == 1);
}

TEST_CASE("config round trip and normalisation") {
  RunConfig c = config("grid:4,5", "center", 123, 99, OutputFormat::csv);
  c.rule = ForcingRule::constant(0.25);
  c.max_steps = 77;
  c.t_max = 40;
  CHECK(run_config_from_json(to_json(c)) == c);
  CHECK(to_json(run_config_from_json(to_json(c))) == to_json(c));

  json loose = to_json(c);
  loose["graph"] = "GRID: 4, 5";
  loose["rule"] = "Constant: 0.25";
  loose["format"] = "CSV";
  CHECK(to_json(run_config_from_json(loose)) == to_json(c));
  CHECK(to_json(c)["graph"] == "grid:4,5");

  json bad = to_json(c);
  bad["trials"] = -3;
  CHECK_THROWS(run_config_from_json(bad));
}

TEST_CASE("option parsing") {
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(parse_format("table") == OutputFormat::table);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  CHECK(parse_start_policy("12").vertex == 12);
  CHECK(parse_start_policy("corner").kind == StartPolicy::Kind::corner);
  CHECK(to_string(parse_start_policy("all")) == "all");
  CHECK_THROWS_AS(parse_start_policy("middle"), std::invalid_argument);
  CHECK(parse_range("2:14") == std::pair<std::size_t, std::size_t>{2, 14});
  CHECK(parse_range("5") == std::pair<std::size_t, std::size_t>{5, 5});
  CHECK_THROWS_AS(parse_range("a:b"), std::invalid_argument);
}

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  CHECK(format_two_decimals(1.0) == "1.00");
  CHECK(format_two_decimals(2.334) == "2.33");
  CHECK(format_two_decimals(2.345) == "2.34");
  CHECK(format_two_decimals(2.335) == "2.34");
  CHECK(format_two_decimals(0.125) == "0.12");
  CHECK(format_two_decimals(15.355) == "15.36");
  CHECK(format_two_decimals(12.8151) == "12.82");
}

TEST_CASE("start resolution") {
  Graph g = make_grid(5, 4);
  GraphFamilySpec spec{GraphFamily::grid, {5, 4}, {}};
  CHECK(resolve_start(parse_start_policy("corner"), g, spec) == 0);
  CHECK(resolve_start(parse_start_policy("center"), g, spec) == 2 + 5 * 1);
  Graph p = make_path(7);
  GraphFamilySpec path{GraphFamily::path, {7}, {}};
  CHECK(resolve_start(parse_start_policy("center"), p, path) == 3);
  CHECK_THROWS_AS(resolve_start(parse_start_policy("9"), p, path), std::invalid_argument);
}

TEST_CASE("tables") {
  TableConfig cube;
  cube.family = TableFamily::hypercube;
  cube.first = 1;
  cube.last = 3;
  cube.trials = 1000;
  std::ostringstream out, err, csv;
  CHECK(cmd_table(cube, out, err, &csv) == 0);
  std::istringstream lines(out.str());
  std::string header, row1;
  std::getline(lines, header);
  std::getline(lines, row1);
  CHECK(row1 == "   1    1.00");
  CHECK(csv.str().rfind("dim,start,trials,seed,mean,std_error,lower_bound,upper_bound,mean_minus_dim\n1,0,1000,1,1,0,1,", 0) == 0);

  TableConfig empty = cube;
  empty.first = 5;
  empty.last = 4;
  std::ostringstream eout, eerr;
  CHECK(cmd_table(empty, eout, eerr) == 0);
  CHECK(eout.str().find('\n') == eout.str().size() - 1);

  TableConfig grid;
  grid.family = TableFamily::grid;
  grid.first = 14;
  grid.last = 14;
  grid.trials = 1000;
  grid.start = parse_start_policy("center");
  grid.format = OutputFormat::csv;
  std::ostringstream gout, gerr;
  REQUIRE(cmd_table(grid, gout, gerr) == 0);
  std::istringstream glines(gout.str());
  std::string gheader, grow;
  std::getline(glines, gheader);
  std::getline(glines, grow);
  // m,n,start,trials,seed,mean,...
  std::istringstream fields(grow);
  std::string field;
  for (int i = 0; i < 6; ++i) std::getline(fields, field, ',');
  CHECK(std::abs(std::stod(field) - 15.35) <= 0.2);

  grid.start = parse_start_policy("min");
  std::ostringstream bout, berr;
  CHECK(cmd_table(grid, bout, berr) == 1);
}

TEST_CASE("CSV output does not depend on the thread count") {
  auto c = config("grid:7,5", "min", 800, 5, OutputFormat::csv);
  c.threads = 1;
  const auto one = capture(cmd_run, c);
  c.threads = 8;
  CHECK(capture(cmd_run, c).out == one.out);
}
