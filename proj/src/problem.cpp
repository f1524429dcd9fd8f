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

#include "dnlab/problem.hpp"

#include "dnlab/errors.hpp"

namespace dnlab {

Problem::Problem(WeightVector alpha, WeightVector beta, ApproxFunction psi, DimensionFunction f)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), psi_(psi), f_(f), a_(0) {
  if (alpha_.side() != Side::alpha) throw ValidationError("first weight vector must be alpha");
  if (beta_.side() != Side::beta) throw ValidationError("second weight vector must be beta");
  a_ = f_bracket(f_, m(), n());
}

}  // namespace dnlab
