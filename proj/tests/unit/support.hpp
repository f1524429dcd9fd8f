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

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "dnlab/weights.hpp"

namespace dnlab::testing {

/// Seeded draws for the property tests.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool coin() { return integer(0, 1) == 1; }

  /// Positive weights summing to one; sorted non-increasing on the beta side.
  WeightVector weights(std::size_t d, Side side) {
    std::vector<double> w(d);
    double total = 0.0;
    for (auto& x : w) total += (x = uniform(0.2, 1.0));
    for (auto& x : w) x /= total;
    if (side == Side::beta) std::sort(w.begin(), w.end(), std::greater<>());
    return WeightVector(w, side);
  }

  std::vector<std::int64_t> nonzero_vector(std::size_t m, std::int64_t bound) {
    std::vector<std::int64_t> u(m, 0);
    while (std::all_of(u.begin(), u.end(), [](auto v) { return v == 0; })) {
      for (auto& v : u) v = integer(-bound, bound);
    }
    return u;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dnlab::testing
