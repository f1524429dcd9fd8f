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

#include "dnlab/mc.hpp"

#include <cmath>
#include <vector>

#include "dnlab/errors.hpp"
#include "dnlab/parallel.hpp"

namespace dnlab::mc {

McEstimate mc_measure(const Region& region, int dim, std::uint64_t samples, std::uint64_t seed,
                      int workers) {
  if (samples < kMinSamples) throw DomainError("mc_measure needs at least 10^4 samples");
  if (dim < 1) throw DomainError("mc_measure needs dim >= 1");
  if (workers <= 0) workers = default_workers();
  const std::size_t lanes = static_cast<std::size_t>(workers);
  const std::uint64_t block = (samples + lanes - 1) / lanes;
  std::vector<std::uint64_t> hits(lanes, 0);
  parallel_for(lanes, workers, [&](std::size_t lane) {
    std::vector<double> point(static_cast<std::size_t>(dim));
    const std::uint64_t begin = lane * block;
    const std::uint64_t end = std::min(samples, begin + block);
    for (std::uint64_t s = begin; s < end; ++s) {
      for (int c = 0; c < dim; ++c)
        point[static_cast<std::size_t>(c)] = counter_uniform(seed, s, static_cast<std::uint64_t>(c));
      if (region(point)) ++hits[lane];
    }
  });
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  for (auto h : hits) est.hits += h;
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(est.hits) / n;
  est.mean = p;
  // Sample variance of a 0/1 variable: n/(n-1) p (1-p).
  const double variance = n / (n - 1.0) * p * (1.0 - p);
  est.std_error = std::sqrt(variance / n);
  return est;
}

}  // namespace dnlab::mc
