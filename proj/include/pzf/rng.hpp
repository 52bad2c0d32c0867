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

#ifndef PZF_RNG_HPP
#define PZF_RNG_HPP

#include <cstdint>

namespace pzf {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based random stream.
///
/// A stream is identified by (seed, trial, step, channel); draw k of a stream
/// is a pure function of that key and k, so any draw can be recomputed in any
/// order on any thread.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  constexpr CounterRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t step,
                       std::uint64_t channel = 0)
      : base_(mix64(mix64(mix64(mix64(seed ^ 0x5a17c0ffee5eedULL) + trial) + step) + channel)) {}

  constexpr std::uint64_t bits(std::uint64_t counter) const {
    return mix64(base_ + (counter + 1) * kGamma);
  }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  /// Uniform integer on [0, bound), bound > 0.
  constexpr std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(bits(counter)) * bound) >> 64);
  }

 private:
  std::uint64_t base_;
};

}  // namespace pzf

#endif  // PZF_RNG_HPP
