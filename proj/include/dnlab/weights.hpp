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

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace dnlab {

enum class Side { alpha, beta };

std::string_view to_string(Side side);

/// Positive weights summing to one. On the beta side the entries must also
/// be non-increasing.
class WeightVector {
 public:
  static constexpr double kSumTolerance = 1e-12;

  WeightVector(std::vector<double> weights, Side side);

  /// Equal weights 1/d.
  static WeightVector uniform(std::size_t d, Side side);

  [[nodiscard]] std::size_t size() const { return weights_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return weights_[i]; }
  [[nodiscard]] std::span<const double> values() const { return weights_; }
  [[nodiscard]] Side side() const { return side_; }
  [[nodiscard]] double max() const;
  [[nodiscard]] double min() const;

 private:
  std::vector<double> weights_;
  Side side_;
};

}  // namespace dnlab
