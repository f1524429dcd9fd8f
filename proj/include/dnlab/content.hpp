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

#include <span>
#include <string_view>
#include <vector>

#include "dnlab/approx_function.hpp"
#include "dnlab/dimension_function.hpp"
#include "dnlab/integer_vector.hpp"
#include "dnlab/problem.hpp"
#include "dnlab/weights.hpp"

namespace dnlab::content {

/// Side lengths a_1 >= ... >= a_d > 0. The constructor sorts.
class Hyperrectangle {
 public:
  explicit Hyperrectangle(std::vector<double> sides);

  [[nodiscard]] std::size_t dimension() const { return sides_.size(); }
  [[nodiscard]] std::span<const double> sides() const { return sides_; }
  [[nodiscard]] double operator[](std::size_t i) const { return sides_[i]; }
  [[nodiscard]] Hyperrectangle scaled(double factor) const;

 private:
  std::vector<double> sides_;
};

enum class ContentMethod { closed_form, cover_oracle };

std::string_view to_string(ContentMethod method);

struct ContentEstimate {
  double value = 0.0;
  /// 1-based. For the closed form, the minimising i; for the oracle, the
  /// number of sides at least as long as the winning cube (clamped to 1..d).
  int argmin_index = 1;
  ContentMethod method = ContentMethod::closed_form;
  /// Side of the winning cube (oracle only).
  double radius = 0.0;
};

/// min_i f(a_i) prod_{j<i} a_j / a_i, smallest i on ties. Requires
/// K ⪯ f ⪯ K+1 for some 0 <= K <= d-1.
ContentEstimate rect_content_closed(const DimensionFunction& f, const Hyperrectangle& rect);

/// Upper bound on the f-content from single-scale grid covers. A ball of
/// diameter r in the sup norm is a cube of side r, and ceil(a_i / r) of
/// them per axis cover the rectangle; the best total f(r) * count over the
/// grid wins. d <= 3.
ContentEstimate rect_content_oracle(const DimensionFunction& f, const Hyperrectangle& rect,
                                    std::span<const double> radius_grid);

/// Every side length plus a geometric ladder with `per_octave` points per
/// factor of two, spanning [a_d / 2, 2 a_1].
std::vector<double> default_radius_grid(const Hyperrectangle& rect, int per_octave = 4);

/// Number of cubes of side t(u)^{-beta_j}/|u| covering the l-th factor of
/// the product of hyperplane neighbourhoods (j, l are 1-based):
///   (t^{-beta_j}/|u|)^{1-m}                        if l < j
///   (t^{-beta_l}/|u|) (t^{-beta_j}/|u|)^{-m}       otherwise
double neighborhood_cover_count(int j, int ell, const IntegerVector& u, const ApproxFunction& psi,
                                const WeightVector& alpha, const WeightVector& beta);

/// min_j f(t^{-beta_j}/|u|) prod_l neighborhood_cover_count(j, l). Computed
/// factor by factor in linear space; series::gamma_u reaches the same number
/// through the closed exponent formula in log space.
double gamma_via_cover(const Problem& problem, const IntegerVector& u);

}  // namespace dnlab::content
