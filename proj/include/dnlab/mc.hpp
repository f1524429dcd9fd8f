// Copyright 2026 The dnlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace dnlab::mc {

/// SplitMix64 output mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based uniform in [0, 1): a pure function of (seed, sample,
/// coordinate), so any partition of the samples across workers draws the
/// same points.
inline double counter_uniform(std::uint64_t seed, std::uint64_t sample, std::uint64_t coordinate) {
  constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  const std::uint64_t key = mix64(seed + kGolden);
  const std::uint64_t h = mix64(mix64(key ^ (sample * kGolden)) + (coordinate + 1) * kGolden);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

struct McEstimate {
  double mean = 0.0;
  /// Sample standard deviation over sqrt(samples).
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t hits = 0;
};

using Region = std::function<bool(std::span<const double>)>;

inline constexpr std::uint64_t kMinSamples = 10'000;

/// Lebesgue measure of `region` inside [0,1]^dim by uniform sampling.
/// Hits are counted per worker and added as integers, so the estimate is
/// identical for every worker count.
McEstimate mc_measure(const Region& region, int dim, std::uint64_t samples, std::uint64_t seed,
                      int workers = 0);

}  // namespace dnlab::mc
