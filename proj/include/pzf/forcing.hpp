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

#ifndef PZF_FORCING_HPP
#define PZF_FORCING_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pzf/graph.hpp"
#include "pzf/rng.hpp"

namespace pzf {

/// Blue vertex set of one graph. Vertices can be painted blue but never
/// cleared, so a state only grows.
class ColorState {
 public:
  ColorState() = default;
  explicit ColorState(std::size_t n_vertices) : blue_(n_vertices) {}
  ColorState(std::size_t n_vertices, std::span<const Vertex> initial) : blue_(n_vertices, initial) {}
  explicit ColorState(VertexSet blue) : blue_(std::move(blue)) {}

  const VertexSet& blue() const { return blue_; }
  std::size_t n_vertices() const { return blue_.universe(); }
  std::size_t blue_count() const { return blue_.size(); }
  bool is_blue(Vertex v) const { return blue_.contains(v); }
  bool all_blue() const { return blue_.full(); }

  bool paint(Vertex v) { return blue_.insert(v); }

  friend bool operator==(const ColorState&, const ColorState&) = default;

 private:
  VertexSet blue_;
};

/// Colour change rule. `standard` forces with C[u]/deg u, `constant` with a
/// fixed p, `push`/`pull`/`push_pull` are the rumour-spreading rules and
/// `classic` is deterministic zero forcing.
struct ForcingRule {
  enum class Kind { standard, constant, push, pull, push_pull, classic };

  Kind kind = Kind::standard;
  double p = 0.0;  // constant only

  static ForcingRule standard() { return {Kind::standard, 0.0}; }
  static ForcingRule constant(double p);
  static ForcingRule push() { return {Kind::push, 0.0}; }
  static ForcingRule pull() { return {Kind::pull, 0.0}; }
  static ForcingRule push_pull() { return {Kind::push_pull, 0.0}; }
  static ForcingRule classic() { return {Kind::classic, 0.0}; }

  /// True for rules whose attempts are independent coins per (blue, white) edge.
  bool edge_independent() const { return kind == Kind::standard || kind == Kind::constant; }

  friend bool operator==(const ForcingRule&, const ForcingRule&) = default;
};

/// `standard`, `constant:0.25`, `push`, `pull`, `pushpull`, `classic`.
ForcingRule parse_rule(std::string_view text);
std::string to_string(const ForcingRule& rule);

/// 1 + number of blue neighbours of a blue vertex u.
std::size_t closed_blue_count(const Graph& g, const ColorState& state, Vertex u);

/// Probability that blue u forces adjacent white v in one step.
double force_probability(const Graph& g, const ColorState& state, Vertex u, Vertex v,
                         const ForcingRule& rule);

/// Probability that white v turns blue in one step: one minus the product of
/// the per-edge failure probabilities over its blue neighbours.
double vertex_absorption_prob(const Graph& g, const ColorState& state, Vertex v,
                              const ForcingRule& rule);

/// Identifies the random stream of one step of one trial.
struct StepKey {
  std::uint64_t seed = 0;
  std::uint64_t trial_index = 0;
  std::uint64_t step = 1;
};

/// One synchronous step. Every decision reads the state at the start of the step.
ColorState step(const Graph& g, const ColorState& state, const ForcingRule& rule, StepKey key);

struct TrialRecord {
  /// Empty when the cutoff was hit or the process provably stalled.
  std::optional<std::size_t> propagation_time;
  /// blue_counts[t] = number of blue vertices after t steps; [0] is |S|.
  std::vector<std::size_t> blue_counts;
  std::uint64_t trial_index = 0;
  std::uint64_t seed = 0;

  bool terminated() const { return propagation_time.has_value(); }
  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// 1000 * n_vertices.
std::size_t default_max_steps(const Graph& g);

/// Called after every step with the step number (1-based) and the states
/// before and after it.
using StepObserver =
    std::function<void(std::size_t step, const ColorState& before, const ColorState& after)>;

/// Incremental simulator for repeated trials on one graph. Keeps blue
/// neighbour counts and the white frontier up to date so a step costs
/// O(frontier volume) rather than O(edges).
class ForcingEngine {
 public:
  ForcingEngine(const Graph& g, ForcingRule rule);

  void load(const ColorState& state);
  /// Runs one step with the stream of `key`; returns the number of new blue vertices.
  std::size_t advance(StepKey key);

  bool all_blue() const { return blue_count_ == graph_->n_vertices(); }
  /// No white vertex can ever turn blue from here.
  bool stalled() const;
  std::size_t blue_count() const { return blue_count_; }
  ColorState state() const;

  TrialRecord run(const ColorState& initial, std::uint64_t seed, std::uint64_t trial_index,
                  std::size_t max_steps, const StepObserver& observer = {});

 private:
  bool decide(Vertex v, const CounterRng& coins, const CounterRng& pushes,
              const CounterRng& pulls) const;

  void refresh_miss(Vertex u);

  const Graph* graph_;
  ForcingRule rule_;
  std::vector<std::uint8_t> blue_;
  std::vector<std::uint32_t> blue_neighbors_;
  std::vector<std::uint8_t> in_frontier_;
  /// Per-edge failure probability of blue u (1 for white vertices).
  std::vector<double> miss_;
  std::vector<Vertex> frontier_;
  std::vector<Vertex> scratch_;
  std::vector<Vertex> newly_blue_;
  std::size_t blue_count_ = 0;
  bool last_step_changed_ = true;
};

/// Runs one trial until every vertex is blue or max_steps elapse. The random
/// streams depend only on (seed, trial_index), never on call order.
TrialRecord run_trial(const Graph& g, const ColorState& initial, const ForcingRule& rule,
                      std::uint64_t seed, std::uint64_t trial_index, std::size_t max_steps,
                      const StepObserver& observer = {});

}  // namespace pzf

#endif  // PZF_FORCING_HPP
