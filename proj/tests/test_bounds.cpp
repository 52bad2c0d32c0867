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

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "pzf/bounds.hpp"

using namespace pzf;

TEST_CASE("grid bounds") {
  auto b22 = grid_bounds(2, 2);
  CHECK(b22.lower.value == 1.0);
  CHECK(b22.upper.value == 16.0);
  CHECK(b22.upper.asymptotic);
  CHECK(grid_bounds(1, 1).lower.value == 0.0);
  CHECK(grid_bounds(14, 14).lower.value == 13.0);
  CHECK(grid_bounds(14, 14).lower.value <= 15.35);
}

TEST_CASE("regular graphs") {
  auto r = regular_upper_bound(60, 5);
  CHECK(r.value == doctest::Approx(60 * std::log(2.0) / 6 * 60));
  CHECK(r.value == doctest::Approx(415.888).epsilon(1e-4));
  CHECK(r.asymptotic);
  CHECK(regular_upper_bound(120, 5).value == doctest::Approx(2 * r.value));

  auto flat = regular_upper_bound(10, 2);
  CHECK(flat.value == 0.0);
  CHECK_FALSE(flat.note.empty());
  CHECK_THROWS_AS(regular_upper_bound(10, 1), std::invalid_argument);
  CHECK_THROWS_AS(regular_upper_bound(4, 5), std::invalid_argument);

  CHECK(diameter_bound(12, 5).value == 6.0);
  CHECK(diameter_bound(6, 5).value == 3.0);
  CHECK(static_cast<double>(diameter(make_complete(6))) <= diameter_bound(6, 5).value);
  for (std::size_t n : {12, 30, 60, 120}) {
    CHECK(static_cast<double>(diameter(make_clique_ring(5, n))) <= diameter_bound(n, 5).value);
  }
  for (std::size_t n : {3, 4, 9, 20}) {
    CHECK(static_cast<double>(diameter(make_cycle(n))) <= diameter_bound(n, 2).value);
    CHECK(static_cast<double>(diameter(make_complete(n))) <= diameter_bound(n, n - 1).value);
  }
}

TEST_CASE("hypercube bounds") {
  const double tail = std::numbers::e / (std::numbers::e - 1);
  CHECK(hypercube_upper_bound(1).value == doctest::Approx(262 + tail));
  CHECK(hypercube_upper_bound(1).value == doctest::Approx(263.58).epsilon(1e-4));
  CHECK(hypercube_upper_bound(16).value ==
        doctest::Approx(262.0 * 16 * (1 + std::log(16.0)) + tail));
  const double published[] = {1.00, 2.32, 3.51, 4.68, 8.79, 12.82, 16.79};
  const std::size_t dims[] = {1, 2, 3, 4, 8, 12, 16};
  for (int i = 0; i < 7; ++i) CHECK(published[i] <= hypercube_upper_bound(dims[i]).value);

  CHECK(hypercube_level_bound(8, 0).value == doctest::Approx(131.0 * 8 / 7));
  CHECK_FALSE(hypercube_level_bound(8, 7).applicable);
  CHECK_FALSE(hypercube_level_bound(4, 5).applicable);
}

TEST_CASE("star tail") {
  auto b = star_tail_bound(10, 40);
  CHECK(b.applicable);
  CHECK(b.value == doctest::Approx(0.2957).epsilon(1e-3));
  CHECK_FALSE(star_tail_bound(10, 20).applicable);
  for (double t = 30; t < 100; t += 1) {
    CHECK(star_tail_bound(10, t + 1).value < star_tail_bound(10, t).value);
  }
}

TEST_CASE("isoperimetric inequality") {
  CHECK(isoperimetric_lower(3, 1).value == 3.0);
  CHECK(isoperimetric_lower(3, 8).value == 0.0);
  CHECK(isoperimetric_lower(3, 2).value == 4.0);
  Graph q3 = make_hypercube(3);
  CHECK(static_cast<double>(edge_boundary(q3, VertexSet(8, std::vector<Vertex>{0, 1}))) ==
        isoperimetric_lower(3, 2).value);

  for (std::size_t dim = 2; dim <= 3; ++dim) {
    Graph q = make_hypercube(dim);
    const std::size_t n = q.n_vertices();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      VertexSet s(n);
      for (Vertex v = 0; v < n; ++v) {
        if (mask >> v & 1) s.insert(v);
      }
      CHECK(static_cast<double>(edge_boundary(q, s)) >=
            isoperimetric_lower(dim, std::popcount(mask)).value - 1e-9);
    }
  }
}

TEST_CASE("bounds for a family") {
  auto names = [](const std::vector<BoundReport>& v) {
    std::vector<std::string> out;
    for (const auto& b : v) out.push_back(b.name);
    return out;
  };
  GraphFamilySpec ring{GraphFamily::clique_ring, {5, 12}, {}};
  auto r = bounds_for(ring, make_named_graph(ring));
  CHECK(names(r) == std::vector<std::string>{"radius_lower", "diameter_upper", "regular_upper"});
  CHECK(r[0].value == 3.0);
  CHECK(r[1].value == 6.0);

  GraphFamilySpec grid{GraphFamily::grid, {4, 5}, {}};
  auto g = bounds_for(grid, make_named_graph(grid));
  CHECK(g.size() >= 2);
  for (const auto& b : g) CHECK(std::isfinite(b.value));
}
