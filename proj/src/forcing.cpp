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

#include "pzf/forcing.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace pzf {

namespace {

// Random channels so the rumour rules never share draws with the coin rules.
constexpr std::uint64_t kCoinChannel = 0;
constexpr std::uint64_t kPushChannel = 1;
constexpr std::uint64_t kPullChannel = 2;

void require_same_graph(const Graph& g, const ColorState& state) {
  if (state.n_vertices() != g.n_vertices()) {
    throw ContractViolation("colour state belongs to a graph of " +
                            std::to_string(state.n_vertices()) + " vertices, not " +
                            std::to_string(g.n_vertices()));
  }
}

}  // namespace

ForcingRule ForcingRule::constant(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("constant rule needs 0 <= p <= 1");
  return {Kind::constant, p};
}

ForcingRule parse_rule(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_' && c != '-') {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (s == "standard") return ForcingRule::standard();
  if (s == "push") return ForcingRule::push();
  if (s == "pull") return ForcingRule::pull();
  if (s == "pushpull") return ForcingRule::push_pull();
  if (s == "classic") return ForcingRule::classic();
  if (s.starts_with("constant:")) {
    std::string_view num(s);
    num.remove_prefix(9);
    double p = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
      throw std::invalid_argument("bad probability in rule '" + std::string(text) + "'");
    }
    return ForcingRule::constant(p);
  }
  throw std::invalid_argument("unknown rule '" + std::string(text) + "'");
}

std::string to_string(const ForcingRule& rule) {
  switch (rule.kind) {
    case ForcingRule::Kind::standard: return "standard";
    case ForcingRule::Kind::push: return "push";
    case ForcingRule::Kind::pull: return "pull";
    case ForcingRule::Kind::push_pull: return "pushpull";
    case ForcingRule::Kind::classic: return "classic";
    case ForcingRule::Kind::constant: {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, rule.p);
      return "constant:" + std::string(buf, ptr);
    }
  }
  return "?";
}

std::size_t closed_blue_count(const Graph& g, const ColorState& state, Vertex u) {
  require_same_graph(g, state);
  if (!state.is_blue(u)) throw ContractViolation("closed_blue_count needs a blue vertex");
  std::size_t c = 1;
  for (Vertex w : g.neighbors(u)) c += state.is_blue(w) ? 1 : 0;
  return c;
}

double force_probability(const Graph& g, const ColorState& state, Vertex u, Vertex v,
                         const ForcingRule& rule) {
  if (!rule.edge_independent()) {
    throw ContractViolation("force_probability is defined for the standard and constant rules");
  }
  require_same_graph(g, state);
  if (!state.is_blue(u) || state.is_blue(v)) {
    throw ContractViolation("force_probability needs a blue u and a white v");
  }
  if (!g.adjacent(u, v)) throw ContractViolation("force_probability on a non-adjacent pair");
  if (rule.kind == ForcingRule::Kind::constant) return rule.p;
  return static_cast<double>(closed_blue_count(g, state, u)) / static_cast<double>(g.degree(u));
}

double vertex_absorption_prob(const Graph& g, const ColorState& state, Vertex v,
                              const ForcingRule& rule) {
  require_same_graph(g, state);
  if (state.is_blue(v)) throw ContractViolation("vertex_absorption_prob needs a white vertex");
  double stay_white = 1.0;
  for (Vertex u : g.neighbors(v)) {
    if (state.is_blue(u)) stay_white *= 1.0 - force_probability(g, state, u, v, rule);
  }
  return 1.0 - stay_white;
}

// ---------------------------------------------------------------------------
// ForcingEngine

ForcingEngine::ForcingEngine(const Graph& g, ForcingRule rule)
    : graph_(&g),
      rule_(rule),
      blue_(g.n_vertices(), 0),
      blue_neighbors_(g.n_vertices(), 0),
      in_frontier_(g.n_vertices(), 0),
      miss_(g.n_vertices(), 1.0) {}

void ForcingEngine::refresh_miss(Vertex u) {
  if (!blue_[u]) return;
  if (rule_.kind == ForcingRule::Kind::constant) {
    miss_[u] = 1.0 - rule_.p;
  } else {
    // Exactly 0 when C[u] = deg u.
    miss_[u] = 1.0 - static_cast<double>(1 + blue_neighbors_[u]) /
                         static_cast<double>(graph_->degree(u));
  }
}

void ForcingEngine::load(const ColorState& state) {
  require_same_graph(*graph_, state);
  const Graph& g = *graph_;
  std::fill(blue_.begin(), blue_.end(), 0);
  std::fill(blue_neighbors_.begin(), blue_neighbors_.end(), 0);
  std::fill(in_frontier_.begin(), in_frontier_.end(), 0);
  std::fill(miss_.begin(), miss_.end(), 1.0);
  frontier_.clear();
  blue_count_ = state.blue_count();
  last_step_changed_ = true;
  for (Vertex u = 0; u < g.n_vertices(); ++u) {
    if (!state.is_blue(u)) continue;
    blue_[u] = 1;
    for (Vertex w : g.neighbors(u)) ++blue_neighbors_[w];
  }
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    refresh_miss(v);
    if (!blue_[v] && blue_neighbors_[v] > 0) {
      in_frontier_[v] = 1;
      frontier_.push_back(v);
    }
  }
}

ColorState ForcingEngine::state() const {
  ColorState s(graph_->n_vertices());
  for (Vertex v = 0; v < blue_.size(); ++v) {
    if (blue_[v]) s.paint(v);
  }
  return s;
}

bool ForcingEngine::stalled() const {
  if (all_blue()) return false;
  if (frontier_.empty()) return true;
  if (rule_.kind == ForcingRule::Kind::constant && rule_.p == 0.0) return true;
  return rule_.kind == ForcingRule::Kind::classic && !last_step_changed_;
}

bool ForcingEngine::decide(Vertex v, const CounterRng& coins, const CounterRng& pushes,
                           const CounterRng& pulls) const {
  const Graph& g = *graph_;
  switch (rule_.kind) {
    case ForcingRule::Kind::standard:
    case ForcingRule::Kind::constant: {
      // Independent coins on every blue edge into v; one draw against the
      // product of their failure probabilities has the same law.
      double stay_white = 1.0;
      for (Vertex u : g.neighbors(v)) stay_white *= miss_[u];
      return coins.uniform(v) >= stay_white;
    }
    case ForcingRule::Kind::classic:
      for (Vertex u : g.neighbors(v)) {
        if (blue_[u] && g.degree(u) - blue_neighbors_[u] == 1) return true;
      }
      return false;
    case ForcingRule::Kind::push:
    case ForcingRule::Kind::pull:
    case ForcingRule::Kind::push_pull: {
      const bool use_push = rule_.kind != ForcingRule::Kind::pull;
      const bool use_pull = rule_.kind != ForcingRule::Kind::push;
      if (use_pull) {
        auto nb = g.neighbors(v);
        if (blue_[nb[pulls.below(v, nb.size())]]) return true;
      }
      if (use_push) {
        for (Vertex u : g.neighbors(v)) {
          if (!blue_[u]) continue;
          auto nb = g.neighbors(u);
          if (nb[pushes.below(u, nb.size())] == v) return true;
        }
      }
      return false;
    }
  }
  return false;
}

std::size_t ForcingEngine::advance(StepKey key) {
  const Graph& g = *graph_;
  const CounterRng coins(key.seed, key.trial_index, key.step, kCoinChannel);
  const CounterRng pushes(key.seed, key.trial_index, key.step, kPushChannel);
  const CounterRng pulls(key.seed, key.trial_index, key.step, kPullChannel);

  newly_blue_.clear();
  for (Vertex v : frontier_) {
    if (decide(v, coins, pushes, pulls)) newly_blue_.push_back(v);
  }

  for (Vertex v : newly_blue_) {
    blue_[v] = 1;
    in_frontier_[v] = 0;
  }
  blue_count_ += newly_blue_.size();

  scratch_.clear();
  for (Vertex v : frontier_) {
    if (!blue_[v]) scratch_.push_back(v);
  }
  for (Vertex v : newly_blue_) {
    for (Vertex w : g.neighbors(v)) {
      ++blue_neighbors_[w];
      if (!blue_[w] && !in_frontier_[w]) {
        in_frontier_[w] = 1;
        scratch_.push_back(w);
      }
    }
  }
  if (rule_.edge_independent()) {
    // Counts are final now; refresh every vertex whose C[u] may have moved.
    for (Vertex v : newly_blue_) {
      refresh_miss(v);
      for (Vertex w : g.neighbors(v)) refresh_miss(w);
    }
  }
  frontier_.swap(scratch_);
  last_step_changed_ = !newly_blue_.empty();
  return newly_blue_.size();
}

TrialRecord ForcingEngine::run(const ColorState& initial, std::uint64_t seed,
                               std::uint64_t trial_index, std::size_t max_steps,
                               const StepObserver& observer) {
  if (initial.blue_count() == 0) throw ContractViolation("a trial needs at least one blue vertex");
  if (max_steps < 1) throw ContractViolation("max_steps must be at least 1");
  load(initial);

  TrialRecord record;
  record.seed = seed;
  record.trial_index = trial_index;
  record.blue_counts.push_back(blue_count_);
  if (all_blue()) {
    record.propagation_time = 0;
    return record;
  }
  ColorState before;
  for (std::size_t t = 1; t <= max_steps; ++t) {
    if (stalled()) break;
    if (observer) before = state();
    advance({seed, trial_index, t});
    record.blue_counts.push_back(blue_count_);
    if (observer) observer(t, before, state());
    if (all_blue()) {
      record.propagation_time = t;
      break;
    }
  }
  return record;
}

std::size_t default_max_steps(const Graph& g) { return 1000 * std::max<std::size_t>(g.n_vertices(), 1); }

ColorState step(const Graph& g, const ColorState& state, const ForcingRule& rule, StepKey key) {
  if (state.blue_count() == 0) throw ContractViolation("step needs at least one blue vertex");
  ForcingEngine engine(g, rule);
  engine.load(state);
  engine.advance(key);
  return engine.state();
}

TrialRecord run_trial(const Graph& g, const ColorState& initial, const ForcingRule& rule,
                      std::uint64_t seed, std::uint64_t trial_index, std::size_t max_steps,
                      const StepObserver& observer) {
  ForcingEngine engine(g, rule);
  return engine.run(initial, seed, trial_index, max_steps, observer);
}

}  // namespace pzf
