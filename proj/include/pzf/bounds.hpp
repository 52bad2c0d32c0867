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

#ifndef PZF_BOUNDS_HPP
#define PZF_BOUNDS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pzf/graph.hpp"

namespace pzf {

/// A closed-form bound. `asymptotic` marks values whose dropped o(1) or
/// O(log n) terms make them unsafe for direct numeric comparison.
struct BoundReport {
  std::string name;
  double value = 0.0;
  std::string applicability;
  bool applicable = true;
  bool asymptotic = false;
  std::string note;
};

struct GridBounds {
  BoundReport lower;
  BoundReport upper;
};

/// lower = (m+n-2)/2, the distance from any start to the farthest corner;
/// upper = 4(m+n) with the o(1) term dropped.
GridBounds grid_bounds(std::size_t m, std::size_t n);

/// Leading term 60 log((d+1)/3) / (d+1) * n of the d-regular upper bound
/// (natural log). The additive O(log n) term is not included.
BoundReport regular_upper_bound(std::size_t n, std::size_t d);

/// 3n/(d+1), the diameter bound for connected d-regular graphs.
BoundReport diameter_bound(std::size_t n, std::size_t d);

/// 2 * 131 dim (1 + log dim) + e/(e-1) (natural log).
BoundReport hypercube_upper_bound(std::size_t dim);

/// 131 dim / (dim - k - 1): expected steps to double the blue set (or halve
/// the white set) from dyadic level k, for 0 <= k < dim - 1.
BoundReport hypercube_level_bound(std::size_t dim, std::size_t k);

/// 0.97^t, the probability that a star with a blue centre is not yet all
/// blue after t steps; applicable when t > 12 log(leaves + 1).
BoundReport star_tail_bound(std::size_t leaves, double t);

/// |S| (dim - log2 |S|), the hypercube edge-isoperimetric bound.
BoundReport isoperimetric_lower(std::size_t dim, std::size_t set_size);

/// Every bound that applies to the given family, for annotation.
std::vector<BoundReport> bounds_for(const GraphFamilySpec& spec, const Graph& g);

}  // namespace pzf

#endif  // PZF_BOUNDS_HPP
