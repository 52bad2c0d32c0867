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

#ifndef PZF_EXACT_HPP
#define PZF_EXACT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pzf/forcing.hpp"
#include "pzf/graph.hpp"

namespace pzf {

using Rational = boost::multiprecision::cpp_rational;

/// The blue-set chain is too large to solve exactly; use Monte Carlo.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxExactVertices = 20;
inline constexpr std::size_t kMaxRationalVertices = 6;

struct ExactOptions {
  std::size_t max_frontier = 20;
  std::uint64_t transition_budget = 100'000'000;
  bool compute_tail = true;
  double tail_epsilon = 1e-12;
  std::size_t t_max_cap = 10'000;
  /// Also solve in exact rational arithmetic when the graph is small enough.
  bool rational = true;
};

struct ExactResult {
  double expected_time = 0.0;
  /// `p/q` form, present when the rational solve ran.
  std::optional<std::string> expected_time_rational;
  /// tail[t] = P(T > t) for t = 0..t_max.
  std::vector<double> tail;
  std::size_t states = 0;
  std::uint64_t transitions = 0;
};

/// Expected propagation time from `initial` by elimination over the monotone
/// chain of blue sets, largest sets first. Each white frontier vertex turns
/// blue independently, so the successor distribution of a state is a product
/// over its frontier. Standard and constant rules only.
ExactResult exact_ept(const Graph& g, const VertexSet& initial, const ForcingRule& rule,
                      const ExactOptions& options = {});

/// Same chain solved over the rationals. Graphs of at most kMaxRationalVertices.
Rational exact_ept_rational(const Graph& g, const VertexSet& initial, const ForcingRule& rule);

/// Minimiser over single-vertex starts; ties (within 1e-12 relative) go to the lowest index.
std::pair<Vertex, ExactResult> exact_ept_min_over_starts(const Graph& g, const ForcingRule& rule,
                                                         const ExactOptions& options = {});

}  // namespace pzf

#endif  // PZF_EXACT_HPP
