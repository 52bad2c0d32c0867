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

#include "pzf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace pzf {

std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PZF_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_trial(const Graph& g, const ForcingRule& rule, std::size_t trials,
                    std::size_t threads,
                    const std::function<void(std::uint64_t, ForcingEngine&)>& fn) {
  const std::size_t workers = std::min(resolve_threads(threads), std::max<std::size_t>(trials, 1));
  // Small blocks keep workers balanced; each trial's randomness is keyed by
  // its index, so the split has no effect on results.
  constexpr std::size_t kBlock = 16;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      ForcingEngine engine(g, rule);
      while (true) {
        const std::size_t begin = next.fetch_add(kBlock);
        if (begin >= trials) break;
        const std::size_t end = std::min(trials, begin + kBlock);
        for (std::size_t i = begin; i < end; ++i) fn(i, engine);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = trials;
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

EptSummary summarize(std::span<const std::optional<std::size_t>> times) {
  EptSummary s;
  s.trials = times.size();
  unsigned __int128 sum = 0;
  unsigned __int128 sum_sq = 0;
  std::size_t k = 0;
  for (const auto& t : times) {
    if (!t) {
      ++s.cutoff;
      continue;
    }
    s.min_time = k == 0 ? *t : std::min(s.min_time, *t);
    s.max_time = k == 0 ? *t : std::max(s.max_time, *t);
    sum += *t;
    sum_sq += static_cast<unsigned __int128>(*t) * *t;
    ++k;
  }
  if (k == 0) return s;
  s.mean = static_cast<double>(static_cast<long double>(sum) / k);
  if (k > 1) {
    // k * sum_sq - sum^2 >= 0 exactly (Cauchy-Schwarz on integers).
    const unsigned __int128 numerator = sum_sq * k - sum * sum;
    s.variance = static_cast<double>(static_cast<long double>(numerator) /
                                     (static_cast<long double>(k) * (k - 1)));
  }
  s.std_error = std::sqrt(s.variance / static_cast<double>(k));
  return s;
}

namespace {

std::vector<std::optional<std::size_t>> simulate_times(const Graph& g, Vertex start,
                                                       const ForcingRule& rule, std::size_t trials,
                                                       std::uint64_t seed,
                                                       const HarnessOptions& options) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (start >= g.n_vertices()) throw std::invalid_argument("start vertex out of range");
  const std::size_t max_steps = options.max_steps ? options.max_steps : default_max_steps(g);
  const ColorState initial(g.n_vertices(), std::span<const Vertex>(&start, 1));
  std::vector<std::optional<std::size_t>> times(trials);
  for_each_trial(g, rule, trials, options.threads, [&](std::uint64_t i, ForcingEngine& engine) {
    times[i] = engine.run(initial, seed, i, max_steps).propagation_time;
  });
  return times;
}

}  // namespace

EptSummary estimate_ept(const Graph& g, Vertex start, const ForcingRule& rule, std::size_t trials,
                        std::uint64_t seed, const HarnessOptions& options) {
  auto times = simulate_times(g, start, rule, trials, seed, options);
  EptSummary s = summarize(times);
  s.start_vertex = start;
  s.rule = rule;
  s.seed = seed;
  return s;
}

const EptSummary& MinOverStarts::best_summary() const {
  for (const auto& c : candidates) {
    if (c.start_vertex == best) return c;
  }
  throw std::logic_error("minimiser missing from candidate list");
}

MinOverStarts estimate_ept_min_over_starts(const Graph& g, std::span<const Vertex> candidates,
                                           const ForcingRule& rule, std::size_t trials,
                                           std::uint64_t seed, const HarnessOptions& options) {
  if (candidates.empty()) throw std::invalid_argument("no start candidates");
  MinOverStarts out;
  std::vector<Vertex> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    out.candidates.push_back(estimate_ept(g, v, rule, trials, seed, options));
    const auto& latest = out.candidates.back();
    if (out.candidates.size() == 1 || latest.mean < out.best_summary().mean) out.best = v;
  }
  return out;
}

Vertex center_vertex(const Graph& g) {
  Vertex best = 0;
  std::size_t best_ecc = kInfinite;
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    const std::size_t ecc = eccentricity(g, v);
    if (ecc < best_ecc) {
      best = v;
      best_ecc = ecc;
    }
  }
  return best;
}

std::vector<Vertex> default_start_candidates(const Graph& g, const GraphFamilySpec* family) {
  std::vector<Vertex> out;
  if (family && family->family == GraphFamily::grid) {
    const std::size_t m = family->params[0];
    const std::size_t n = family->params[1];
    const auto mid_i = (m - 1) / 2;
    const auto mid_j = (n - 1) / 2;
    out = {0, static_cast<Vertex>(mid_i), static_cast<Vertex>(mid_i + m * mid_j)};
  } else if (family && (family->family == GraphFamily::hypercube ||
                        family->family == GraphFamily::cycle ||
                        family->family == GraphFamily::complete)) {
    out = {0};
  } else if (g.n_vertices() <= 12) {
    for (Vertex v = 0; v < g.n_vertices(); ++v) out.push_back(v);
  } else {
    out = {0, center_vertex(g)};
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Doubling profile

void add_trajectory(std::span<const std::size_t> blue_counts, std::size_t n_vertices,
                    std::vector<std::size_t>& blue_steps, std::vector<std::size_t>& white_steps,
                    std::size_t& final_steps) {
  // Step t runs from blue_counts[t-1]; it is charged to the level of that state.
  for (std::size_t t = 1; t < blue_counts.size(); ++t) {
    const std::size_t blue = blue_counts[t - 1];
    const std::size_t white = n_vertices - blue;
    if (white == 1) {
      ++final_steps;
    } else if (2 * blue < n_vertices) {
      const auto k = static_cast<std::size_t>(std::bit_width(blue) - 1);
      if (blue_steps.size() <= k) blue_steps.resize(k + 1, 0);
      ++blue_steps[k];
    } else {
      // 2^k < white <= 2^(k+1)
      const auto k = static_cast<std::size_t>(std::bit_width(white - 1) - 1);
      if (white_steps.size() <= k) white_steps.resize(k + 1, 0);
      ++white_steps[k];
    }
  }
}

double DoublingProfile::total() const {
  double sum = final_vertex_mean;
  for (const auto& l : blue_phase) sum += l.mean_steps;
  for (const auto& l : white_phase) sum += l.mean_steps;
  return sum;
}

DoublingProfile doubling_profile(const Graph& g, Vertex start, const ForcingRule& rule,
                                 std::size_t trials, std::uint64_t seed,
                                 const HarnessOptions& options) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (start >= g.n_vertices()) throw std::invalid_argument("start vertex out of range");
  const std::size_t n = g.n_vertices();
  const std::size_t max_steps = options.max_steps ? options.max_steps : default_max_steps(g);
  const ColorState initial(n, std::span<const Vertex>(&start, 1));

  struct PerTrial {
    bool terminated = false;
    std::size_t time = 0;
    std::vector<std::size_t> blue, white;
    std::size_t final_steps = 0;
  };
  std::vector<PerTrial> per(trials);
  for_each_trial(g, rule, trials, options.threads, [&](std::uint64_t i, ForcingEngine& engine) {
    TrialRecord r = engine.run(initial, seed, i, max_steps);
    if (!r.terminated()) return;
    per[i].terminated = true;
    per[i].time = *r.propagation_time;
    add_trajectory(r.blue_counts, n, per[i].blue, per[i].white, per[i].final_steps);
  });

  DoublingProfile profile;
  profile.trials = trials;
  std::size_t done = 0;
  std::size_t total_time = 0;
  std::vector<std::size_t> blue_sum, white_sum, blue_visits, white_visits;
  std::size_t final_sum = 0;
  auto merge = [](std::vector<std::size_t>& sum, std::vector<std::size_t>& visits,
                  const std::vector<std::size_t>& steps) {
    if (sum.size() < steps.size()) {
      sum.resize(steps.size(), 0);
      visits.resize(steps.size(), 0);
    }
    for (std::size_t k = 0; k < steps.size(); ++k) {
      sum[k] += steps[k];
      visits[k] += steps[k] > 0 ? 1 : 0;
    }
  };
  for (const auto& p : per) {
    if (!p.terminated) {
      ++profile.cutoff;
      continue;
    }
    ++done;
    total_time += p.time;
    merge(blue_sum, blue_visits, p.blue);
    merge(white_sum, white_visits, p.white);
    final_sum += p.final_steps;
    profile.final_vertex_visits += p.final_steps > 0 ? 1 : 0;
  }
  if (done == 0) return profile;

  auto levels = [done](const std::vector<std::size_t>& sum, const std::vector<std::size_t>& visits) {
    std::vector<DoublingLevel> out;
    for (std::size_t k = 0; k < sum.size(); ++k) {
      DoublingLevel l;
      l.level = k;
      l.mean_steps = static_cast<double>(sum[k]) / static_cast<double>(done);
      l.visits = visits[k];
      l.conditional_mean = visits[k] ? static_cast<double>(sum[k]) / static_cast<double>(visits[k]) : 0.0;
      out.push_back(l);
    }
    return out;
  };
  profile.blue_phase = levels(blue_sum, blue_visits);
  profile.white_phase = levels(white_sum, white_visits);
  profile.final_vertex_mean = static_cast<double>(final_sum) / static_cast<double>(done);
  profile.mean_propagation_time = static_cast<double>(total_time) / static_cast<double>(done);
  return profile;
}

TailEstimate tail_estimate(const Graph& g, Vertex start, const ForcingRule& rule,
                           std::size_t trials, std::uint64_t seed, std::size_t t,
                           const HarnessOptions& options) {
  auto times = simulate_times(g, start, rule, trials, seed, options);
  TailEstimate out;
  out.trials = trials;
  for (const auto& time : times) out.exceed += (!time || *time > t) ? 1 : 0;
  out.probability = static_cast<double>(out.exceed) / static_cast<double>(trials);
  out.std_error = std::sqrt(out.probability * (1.0 - out.probability) / static_cast<double>(trials));
  return out;
}

}  // namespace pzf
