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

#include "pzf/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace pzf {

namespace {

using Mask = std::uint32_t;

template <class Scalar>
Scalar ratio(std::size_t num, std::size_t den) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return static_cast<Scalar>(num) / static_cast<Scalar>(den);
  } else {
    return Scalar(static_cast<long long>(num)) / Scalar(static_cast<long long>(den));
  }
}

/// Neumaier summation for floating scalars, plain addition otherwise.
template <class Scalar>
class Accumulator {
 public:
  void add(const Scalar& x) {
    if constexpr (std::is_floating_point_v<Scalar>) {
      const Scalar t = sum_ + x;
      if (std::abs(sum_) >= std::abs(x)) {
        carry_ += (sum_ - t) + x;
      } else {
        carry_ += (x - t) + sum_;
      }
      sum_ = t;
    } else {
      sum_ += x;
    }
  }
  Scalar value() const { return sum_ + carry_; }

 private:
  Scalar sum_{0};
  Scalar carry_{0};
};

template <class Scalar>
struct Successors {
  std::vector<Mask> masks;     // masks[0] is the state itself
  std::vector<Scalar> probs;   // probs[s] = P(exactly subset s of the frontier turns blue)
};

template <class Scalar>
class ChainSolver {
 public:
  ChainSolver(const Graph& g, const ForcingRule& rule, const ExactOptions& options)
      : rule_(rule), options_(options), n_(g.n_vertices()) {
    full_ = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
    neighbors_.resize(n_);
    degree_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u : g.neighbors(v)) neighbors_[v] |= Mask{1} << u;
      degree_[v] = g.degree(v);
    }
    if constexpr (!std::is_floating_point_v<Scalar>) {
      constant_p_ = Scalar(rule.p);
    } else {
      constant_p_ = static_cast<Scalar>(rule.p);
    }
    memo_.assign(std::size_t{1} << n_, Scalar{0});
    done_.assign(std::size_t{1} << n_, 0);
  }

  Mask full() const { return full_; }
  std::uint64_t transitions() const { return transitions_; }
  std::size_t states() const { return states_; }
  bool reached(Mask b) const { return done_[b] != 0; }

  void successors(Mask blue, Successors<Scalar>& out) const {
    std::vector<Vertex> frontier;
    std::vector<Scalar> absorb;
    for (Vertex v = 0; v < n_; ++v) {
      const Mask bit = Mask{1} << v;
      if ((blue & bit) || !(neighbors_[v] & blue)) continue;
      Scalar stay{1};
      for (Mask rest = neighbors_[v] & blue; rest; rest &= rest - 1) {
        const auto u = static_cast<Vertex>(std::countr_zero(rest));
        Scalar f = rule_.kind == ForcingRule::Kind::constant
                       ? constant_p_
                       : ratio<Scalar>(1 + std::popcount(neighbors_[u] & blue), degree_[u]);
        stay *= Scalar{1} - f;
      }
      frontier.push_back(v);
      absorb.push_back(Scalar{1} - stay);
    }
    if (frontier.size() > options_.max_frontier) {
      throw BudgetExceeded("blue-set chain has a frontier of " + std::to_string(frontier.size()) +
                           " vertices (cap " + std::to_string(options_.max_frontier) +
                           "); use Monte Carlo estimation instead");
    }
    const std::size_t count = std::size_t{1} << frontier.size();
    out.masks.assign(count, blue);
    out.probs.assign(count, Scalar{1});
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const std::size_t half = std::size_t{1} << i;
      const Mask bit = Mask{1} << frontier[i];
      const Scalar miss = Scalar{1} - absorb[i];
      for (std::size_t s = 0; s < half; ++s) {
        out.masks[s | half] = out.masks[s] | bit;
        out.probs[s | half] = out.probs[s] * absorb[i];
        out.probs[s] *= miss;
      }
    }
  }

  Scalar expectation(Mask blue) {
    if (blue == full_) return Scalar{0};
    if (done_[blue]) return memo_[blue];

    Successors<Scalar> next;
    successors(blue, next);
    transitions_ += next.masks.size();
    ++states_;
    if (transitions_ > options_.transition_budget) {
      throw BudgetExceeded("blue-set chain exceeds the transition budget of " +
                           std::to_string(options_.transition_budget) +
                           "; use Monte Carlo estimation instead");
    }

    Accumulator<Scalar> acc;
    acc.add(Scalar{1});
    for (std::size_t s = 1; s < next.masks.size(); ++s) {
      if (next.probs[s] == Scalar{0}) continue;
      acc.add(next.probs[s] * expectation(next.masks[s]));
    }
    const Scalar leave = Scalar{1} - next.probs[0];
    memo_[blue] = acc.value() / leave;
    done_[blue] = 1;
    return memo_[blue];
  }

 private:
  ForcingRule rule_;
  ExactOptions options_;
  std::size_t n_;
  Mask full_ = 0;
  Scalar constant_p_{0};
  std::vector<Mask> neighbors_;
  std::vector<std::size_t> degree_;
  std::vector<Scalar> memo_;
  std::vector<std::uint8_t> done_;
  std::uint64_t transitions_ = 0;
  std::size_t states_ = 0;
};

/// Forward propagation of the state distribution; tail[t] = P(T > t).
std::vector<double> propagate_tail(const ChainSolver<long double>& chain, Mask initial,
                                   std::size_t n_vertices, const ExactOptions& options) {
  std::vector<double> tail;
  if (initial == chain.full()) {
    tail.push_back(0.0);
    return tail;
  }
  std::vector<Mask> order;
  for (Mask b = 0; b < (Mask{1} << n_vertices); ++b) {
    if (chain.reached(b)) order.push_back(b);
  }
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) {
    return std::popcount(a) > std::popcount(b);
  });

  constexpr std::uint64_t kCacheLimit = 1u << 22;
  const bool cache = chain.transitions() <= kCacheLimit;
  std::vector<Successors<long double>> cached;
  if (cache) {
    cached.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) chain.successors(order[i], cached[i]);
  }

  std::vector<long double> mass(std::size_t{1} << n_vertices, 0.0L);
  mass[initial] = 1.0L;
  tail.push_back(1.0);
  Successors<long double> scratch;
  for (std::size_t t = 1; t <= options.t_max_cap; ++t) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      const long double m = mass[order[i]];
      if (m == 0.0L) continue;
      const Successors<long double>* next = &scratch;
      if (cache) {
        next = &cached[i];
      } else {
        chain.successors(order[i], scratch);
      }
      mass[order[i]] = m * next->probs[0];
      for (std::size_t s = 1; s < next->masks.size(); ++s) mass[next->masks[s]] += m * next->probs[s];
    }
    Accumulator<long double> residual;
    for (Mask b : order) residual.add(mass[b]);
    tail.push_back(static_cast<double>(residual.value()));
    if (residual.value() < options.tail_epsilon) break;
  }
  return tail;
}

Mask to_mask(const VertexSet& set) {
  Mask m = 0;
  for (Vertex v : set.members()) m |= Mask{1} << v;
  return m;
}

void check_inputs(const Graph& g, const VertexSet& initial, const ForcingRule& rule,
                  std::size_t max_vertices) {
  if (!rule.edge_independent()) {
    throw std::invalid_argument("the exact oracle supports the standard and constant rules only");
  }
  if (rule.kind == ForcingRule::Kind::constant && rule.p <= 0.0) {
    throw std::invalid_argument("constant rule with p = 0 never propagates");
  }
  if (g.n_vertices() > max_vertices) {
    throw BudgetExceeded("exact analysis is limited to " + std::to_string(max_vertices) +
                         " vertices (graph has " + std::to_string(g.n_vertices()) +
                         "); use Monte Carlo estimation instead");
  }
  if (!is_connected(g)) throw std::invalid_argument("exact analysis needs a connected graph");
  if (initial.universe() != g.n_vertices()) {
    throw ContractViolation("initial set belongs to a different graph");
  }
  if (initial.empty()) throw ContractViolation("initial blue set is empty");
}

}  // namespace

ExactResult exact_ept(const Graph& g, const VertexSet& initial, const ForcingRule& rule,
                      const ExactOptions& options) {
  check_inputs(g, initial, rule, kMaxExactVertices);
  const Mask start = to_mask(initial);

  ChainSolver<long double> chain(g, rule, options);
  ExactResult result;
  result.expected_time = static_cast<double>(chain.expectation(start));
  result.states = chain.states();
  result.transitions = chain.transitions();

  if (options.rational && g.n_vertices() <= kMaxRationalVertices) {
    Rational exact = exact_ept_rational(g, initial, rule);
    result.expected_time_rational = exact.str();
    result.expected_time = static_cast<double>(exact);
  }
  if (options.compute_tail) result.tail = propagate_tail(chain, start, g.n_vertices(), options);
  return result;
}

Rational exact_ept_rational(const Graph& g, const VertexSet& initial, const ForcingRule& rule) {
  check_inputs(g, initial, rule, kMaxRationalVertices);
  ChainSolver<Rational> chain(g, rule, ExactOptions{});
  return chain.expectation(to_mask(initial));
}

std::pair<Vertex, ExactResult> exact_ept_min_over_starts(const Graph& g, const ForcingRule& rule,
                                                         const ExactOptions& options) {
  if (g.n_vertices() == 0) throw std::invalid_argument("empty graph");
  std::pair<Vertex, ExactResult> best{0, {}};
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    ExactResult r = exact_ept(g, VertexSet(g.n_vertices(), std::span<const Vertex>(&v, 1)), rule,
                              options);
    const double incumbent = best.second.expected_time;
    if (v == 0 || r.expected_time < incumbent - 1e-12 * std::max(1.0, incumbent)) {
      best = {v, std::move(r)};
    }
  }
  return best;
}

}  // namespace pzf
