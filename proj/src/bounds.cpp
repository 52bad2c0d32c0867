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

#include "pzf/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pzf {

GridBounds grid_bounds(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be >= 1");
  const double sum = static_cast<double>(m + n);
  GridBounds b;
  b.lower = {"grid_lower", (sum - 2.0) / 2.0, "m, n >= 1", true, false,
             "farthest corner is at distance >= (m+n-2)/2 from any start"};
  b.upper = {"grid_upper", 4.0 * sum, "m, n >= 1", true, true, "o(1)(m+n) term dropped"};
  return b;
}

BoundReport regular_upper_bound(std::size_t n, std::size_t d) {
  if (d < 2) throw std::invalid_argument("regular upper bound needs d >= 2");
  if (n < d + 1) throw std::invalid_argument("regular upper bound needs n >= d+1");
  const double dd = static_cast<double>(d) + 1.0;
  const double log_term = std::log(dd / 3.0);
  BoundReport r{"regular_upper", 60.0 * log_term / dd * static_cast<double>(n), "d >= 2, n >= d+1",
                true, true, "leading term only; additive O(log n) term not included"};
  if (log_term <= 1.0) {
    r.note += "; d+1 <= 3e, so log((d+1)/3) <= 1 and the leading term is not dominant";
  }
  return r;
}

BoundReport diameter_bound(std::size_t n, std::size_t d) {
  if (d < 1) throw std::invalid_argument("diameter bound needs d >= 1");
  return {"diameter_upper", 3.0 * static_cast<double>(n) / (static_cast<double>(d) + 1.0),
          "connected d-regular graph", true, false, ""};
}

BoundReport hypercube_upper_bound(std::size_t dim) {
  if (dim < 1) throw std::invalid_argument("hypercube bound needs dim >= 1");
  constexpr double e = std::numbers::e;
  const double x = static_cast<double>(dim);
  return {"hypercube_upper", 2.0 * 131.0 * x * (1.0 + std::log(x)) + e / (e - 1.0), "dim >= 1",
          true, false, "doubling phase + halving phase + last vertex"};
}

BoundReport hypercube_level_bound(std::size_t dim, std::size_t k) {
  if (dim < 2 || k + 1 >= dim) {
    return {"hypercube_level", std::numeric_limits<double>::infinity(), "0 <= k < dim-1", false,
            false, "level outside the range the bound covers"};
  }
  return {"hypercube_level", 131.0 * static_cast<double>(dim) / static_cast<double>(dim - k - 1),
          "0 <= k < dim-1", true, false, ""};
}

BoundReport star_tail_bound(std::size_t leaves, double t) {
  const double threshold = 12.0 * std::log(static_cast<double>(leaves) + 1.0);
  BoundReport r{"star_tail", std::pow(0.97, t), "t > 12 log(leaves+1)", t > threshold, false, ""};
  if (!r.applicable) r.note = "t must exceed " + std::to_string(threshold);
  return r;
}

BoundReport isoperimetric_lower(std::size_t dim, std::size_t set_size) {
  if (set_size < 1 || dim >= 64 || set_size > (std::size_t{1} << dim)) {
    throw std::invalid_argument("isoperimetric bound needs 1 <= |S| <= 2^dim");
  }
  const double s = static_cast<double>(set_size);
  return {"isoperimetric_lower", s * (static_cast<double>(dim) - std::log2(s)),
          "S subset of Q_dim, nonempty", true, false, ""};
}

std::vector<BoundReport> bounds_for(const GraphFamilySpec& spec, const Graph& g) {
  std::vector<BoundReport> out;
  // Vertex-transitive families have radius = eccentricity of vertex 0; the
  // all-pairs scan is skipped for large graphs of other families.
  constexpr std::size_t kRadiusScanLimit = 5000;
  const bool transitive = spec.family == GraphFamily::hypercube ||
                          spec.family == GraphFamily::cycle || spec.family == GraphFamily::complete;
  if (g.n_vertices() > 0 && is_connected(g) && (transitive || g.n_vertices() <= kRadiusScanLimit)) {
    std::size_t radius = eccentricity(g, 0);
    for (Vertex v = 1; !transitive && v < g.n_vertices(); ++v) {
      radius = std::min(radius, eccentricity(g, v));
    }
    out.push_back({"radius_lower", static_cast<double>(radius), "connected graph", true, false,
                   "no start can finish before its eccentricity"});
  }
  auto add_regular = [&](std::size_t d) {
    out.push_back(diameter_bound(g.n_vertices(), d));
    if (d >= 2) out.push_back(regular_upper_bound(g.n_vertices(), d));
  };
  switch (spec.family) {
    case GraphFamily::grid: {
      auto b = grid_bounds(spec.params[0], spec.params[1]);
      out.push_back(b.lower);
      out.push_back(b.upper);
      break;
    }
    case GraphFamily::hypercube:
      out.push_back(hypercube_upper_bound(spec.params[0]));
      add_regular(spec.params[0]);
      break;
    case GraphFamily::star: {
      const double t = std::floor(12.0 * std::log(static_cast<double>(spec.params[0]) + 1.0)) + 1.0;
      out.push_back(star_tail_bound(spec.params[0], t));
      break;
    }
    case GraphFamily::clique_ring:
      add_regular(spec.params[0]);
      break;
    case GraphFamily::complete:
      if (g.n_vertices() >= 2) add_regular(g.n_vertices() - 1);
      break;
    case GraphFamily::cycle:
      add_regular(2);
      break;
    case GraphFamily::path:
      break;
    case GraphFamily::edge_list_file: {
      if (g.n_vertices() == 0 || !is_connected(g)) break;
      const std::size_t d = g.degree(0);
      bool regular = d >= 1;
      for (Vertex v = 0; v < g.n_vertices() && regular; ++v) regular = g.degree(v) == d;
      if (regular) add_regular(d);
      break;
    }
  }
  return out;
}

}  // namespace pzf
