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

#ifndef PZF_HARNESS_HPP
#define PZF_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pzf/forcing.hpp"
#include "pzf/graph.hpp"

namespace pzf {

struct HarnessOptions {
  /// 0 selects default_max_steps(g).
  std::size_t max_steps = 0;
  /// 0 reads PZF_THREADS, falling back to the hardware concurrency.
  std::size_t threads = 0;
};

/// Worker count after applying PZF_THREADS; always at least 1.
std::size_t resolve_threads(std::size_t requested);

/// Runs fn(trial_index, engine) for every trial in [0, trials) across worker
/// threads. Each worker owns one engine; results must be written by index.
void for_each_trial(const Graph& g, const ForcingRule& rule, std::size_t trials,
                    std::size_t threads,
                    const std::function<void(std::uint64_t, ForcingEngine&)>& fn);

/// Monte Carlo estimate of the expected propagation time from one start.
struct EptSummary {
  double mean = 0.0;
  double variance = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;
  /// Trials that hit the step cutoff; excluded from the moments.
  std::size_t cutoff = 0;
  std::size_t min_time = 0;
  std::size_t max_time = 0;
  Vertex start_vertex = 0;
  ForcingRule rule;
  std::uint64_t seed = 0;

  std::size_t terminated() const { return trials - cutoff; }
  friend bool operator==(const EptSummary&, const EptSummary&) = default;
};

/// Summary of a list of per-trial propagation times (nullopt = cutoff).
/// Moments use exact integer sums, so the result is independent of order.
EptSummary summarize(std::span<const std::optional<std::size_t>> times);

EptSummary estimate_ept(const Graph& g, Vertex start, const ForcingRule& rule, std::size_t trials,
                        std::uint64_t seed, const HarnessOptions& options = {});

struct MinOverStarts {
  Vertex best = 0;
  std::vector<EptSummary> candidates;

  const EptSummary& best_summary() const;
};

/// Estimates every candidate with the same seed and returns the one with
/// the lowest mean (lowest index on ties).
MinOverStarts estimate_ept_min_over_starts(const Graph& g, std::span<const Vertex> candidates,
                                           const ForcingRule& rule, std::size_t trials,
                                           std::uint64_t seed, const HarnessOptions& options = {});

/// Lowest-index vertex of minimum eccentricity.
Vertex center_vertex(const Graph& g);

/// Corner, edge midpoint and centre for grids; vertex 0 for vertex-transitive
/// families; every vertex when n <= 12; otherwise vertex 0 and the centre.
std::vector<Vertex> default_start_candidates(const Graph& g, const GraphFamilySpec* family = nullptr);

/// Mean steps spent per dyadic level of a trajectory. The blue phase covers
/// states with 2*blue < n, split by floor(log2 blue); the white phase covers
/// states with at least two white vertices, split by 2^k < white <= 2^(k+1);
/// the final phase is the last white vertex.
struct DoublingLevel {
  std::size_t level = 0;
  /// Steps spent at this level, averaged over all terminated trials.
  double mean_steps = 0.0;
  /// Terminated trials that spent at least one step at this level.
  std::size_t visits = 0;
  /// Mean steps over the trials that visited.
  double conditional_mean = 0.0;
};

struct DoublingProfile {
  std::vector<DoublingLevel> blue_phase;
  std::vector<DoublingLevel> white_phase;
  double final_vertex_mean = 0.0;
  std::size_t final_vertex_visits = 0;
  /// Mean propagation time over the same terminated trials.
  double mean_propagation_time = 0.0;
  std::size_t trials = 0;
  std::size_t cutoff = 0;

  /// Sum of all level means plus the final phase.
  double total() const;
};

DoublingProfile doubling_profile(const Graph& g, Vertex start, const ForcingRule& rule,
                                 std::size_t trials, std::uint64_t seed,
                                 const HarnessOptions& options = {});

/// Accumulates one trajectory into per-level step counts; exposed for tests.
void add_trajectory(std::span<const std::size_t> blue_counts, std::size_t n_vertices,
                    std::vector<std::size_t>& blue_steps, std::vector<std::size_t>& white_steps,
                    std::size_t& final_steps);

struct TailEstimate {
  double probability = 0.0;
  double std_error = 0.0;
  std::size_t exceed = 0;
  std::size_t trials = 0;
};

/// Fraction of trials with propagation time > t (cutoff trials count as exceeding).
TailEstimate tail_estimate(const Graph& g, Vertex start, const ForcingRule& rule,
                           std::size_t trials, std::uint64_t seed, std::size_t t,
                           const HarnessOptions& options = {});

}  // namespace pzf

#endif  // PZF_HARNESS_HPP
