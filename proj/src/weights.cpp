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

#include "dnlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dnlab/errors.hpp"

namespace dnlab {

std::string_view to_string(Side side) { return side == Side::alpha ? "alpha" : "beta"; }

WeightVector::WeightVector(std::vector<double> weights, Side side)
    : weights_(std::move(weights)), side_(side) {
  const std::string name(to_string(side_));
  if (weights_.empty()) throw ValidationError(name + " weights must not be empty");
  for (double w : weights_) {
    if (!std::isfinite(w) || w <= 0.0)
      throw ValidationError(name + " weights must be strictly positive");
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > kSumTolerance)
    throw ValidationError(name + " weights must sum to 1 (got " + std::to_string(total) + ")");
  if (side_ == Side::beta && !std::is_sorted(weights_.begin(), weights_.end(), std::greater<>()))
    throw ValidationError("beta weights must be non-increasing");
}

WeightVector WeightVector::uniform(std::size_t d, Side side) {
  // 1/d summed d times can drift by an ulp or two, well inside tolerance.
  return WeightVector(std::vector<double>(d, 1.0 / static_cast<double>(d)), side);
}

double WeightVector::max() const { return *std::max_element(weights_.begin(), weights_.end()); }
double WeightVector::min() const { return *std::min_element(weights_.begin(), weights_.end()); }

}  // namespace dnlab
