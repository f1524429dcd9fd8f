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

#include "dnlab/approx_function.hpp"
#include "dnlab/dimension_function.hpp"
#include "dnlab/weights.hpp"

namespace dnlab {

/// Everything the series criterion consumes: the weights on both sides, the
/// approximating function and the dimension function. Construction checks
/// the hypotheses that do not involve b (n >= 2, beta sorted, the bracket
/// 1 <= a <= n-1 and f ≺ mn).
class Problem {
 public:
  Problem(WeightVector alpha, WeightVector beta, ApproxFunction psi, DimensionFunction f);

  [[nodiscard]] int m() const { return static_cast<int>(alpha_.size()); }
  [[nodiscard]] int n() const { return static_cast<int>(beta_.size()); }
  [[nodiscard]] const WeightVector& alpha() const { return alpha_; }
  [[nodiscard]] const WeightVector& beta() const { return beta_; }
  [[nodiscard]] const ApproxFunction& psi() const { return psi_; }
  [[nodiscard]] const DimensionFunction& f() const { return f_; }
  /// The bracket index a of f.
  [[nodiscard]] int bracket() const { return a_; }

 private:
  WeightVector alpha_;
  WeightVector beta_;
  ApproxFunction psi_;
  DimensionFunction f_;
  int a_;
};

}  // namespace dnlab
