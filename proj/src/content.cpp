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

#include "dnlab/content.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "dnlab/errors.hpp"

namespace dnlab::content {

Hyperrectangle::Hyperrectangle(std::vector<double> sides) : sides_(std::move(sides)) {
  if (sides_.empty()) throw ValidationError("hyperrectangle needs at least one side");
  for (double a : sides_) {
    if (!(std::isfinite(a) && a > 0.0)) throw ValidationError("hyperrectangle sides must be > 0");
  }
  std::sort(sides_.begin(), sides_.end(), std::greater<>());
}

Hyperrectangle Hyperrectangle::scaled(double factor) const {
  auto sides = sides_;
  for (auto& a : sides) a *= factor;
  return Hyperrectangle(std::move(sides));
}

std::string_view to_string(ContentMethod method) {
  return method == ContentMethod::closed_form ? "closed_form" : "cover_oracle";
}

namespace {

void require_bracket(const DimensionFunction& f, std::size_t d) {
  const int top = static_cast<int>(d) - 1;
  if (f.integer_bracket(0, top)) return;
  std::ostringstream why;
  if (!f.below(static_cast<double>(d))) {
    why << "f ⪯ " << d << " fails: local exponent reaches " << f.exponent_high();
  } else {
    why << "no 0 <= K <= " << top << " with K ⪯ f ⪯ K+1: exponent band [" << f.exponent_low()
        << ", " << f.exponent_high() << "] straddles an integer";
  }
  throw BracketError(why.str());
}

}  // namespace

ContentEstimate rect_content_closed(const DimensionFunction& f, const Hyperrectangle& rect) {
  require_bracket(f, rect.dimension());
  ContentEstimate best;
  best.value = std::numeric_limits<double>::infinity();
  best.method = ContentMethod::closed_form;
  double stretch = 1.0;  // prod_{j<i} a_j
  for (std::size_t i = 0; i < rect.dimension(); ++i) {
    const double a = rect[i];
    const double term = f(a) * (stretch / std::pow(a, static_cast<double>(i)));
    if (term < best.value) {
      best.value = term;
      best.argmin_index = static_cast<int>(i) + 1;
    }
    stretch *= a;
  }
  return best;
}

ContentEstimate rect_content_oracle(const DimensionFunction& f, const Hyperrectangle& rect,
                                    std::span<const double> radius_grid) {
  if (rect.dimension() > 3) throw DomainError("cover oracle supports d <= 3 only");
  if (radius_grid.empty()) throw DomainError("resolution error: empty radius grid");
  require_bracket(f, rect.dimension());
  ContentEstimate best;
  best.value = std::numeric_limits<double>::infinity();
  best.method = ContentMethod::cover_oracle;
  for (double r : radius_grid) {
    if (!(r > 0.0)) throw DomainError("radius grid entries must be > 0");
    double count = 1.0;
    int longer = 0;
    for (double a : rect.sides()) {
      count *= std::ceil(a / r);
      longer += a >= r ? 1 : 0;
    }
    const double total = f(r) * count;
    if (total < best.value) {
      best.value = total;
      best.radius = r;
      best.argmin_index = std::clamp(longer, 1, static_cast<int>(rect.dimension()));
    }
  }
  return best;
}

std::vector<double> default_radius_grid(const Hyperrectangle& rect, int per_octave) {
  if (per_octave < 1) throw DomainError("radius grid needs at least one point per octave");
  std::vector<double> grid(rect.sides().begin(), rect.sides().end());
  const double lo = rect[rect.dimension() - 1] / 2.0;
  const double hi = 2.0 * rect[0];
  const double step = std::exp2(1.0 / per_octave);
  for (double r = lo; r <= hi * (1.0 + 1e-12); r *= step) grid.push_back(r);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

namespace {

// Per-direction count from the cover of the hyperplane neighbourhoods.
double cover_count(int j, int ell, double t, double norm, int m, const WeightVector& beta) {
  const double side_j = std::pow(t, -beta[static_cast<std::size_t>(j - 1)]) / norm;
  if (ell < j) return std::pow(side_j, 1.0 - m);
  const double side_l = std::pow(t, -beta[static_cast<std::size_t>(ell - 1)]) / norm;
  return side_l * std::pow(side_j, -static_cast<double>(m));
}

}  // namespace

double neighborhood_cover_count(int j, int ell, const IntegerVector& u, const ApproxFunction& psi,
                                const WeightVector& alpha, const WeightVector& beta) {
  const int n = static_cast<int>(beta.size());
  if (j < 1 || j > n || ell < 1 || ell > n)
    throw DomainError("neighborhood_cover_count: index out of range");
  const double t = t_of_u(psi, alpha, u).t;
  return cover_count(j, ell, t, static_cast<double>(u.sup_norm()), static_cast<int>(alpha.size()),
                     beta);
}

double gamma_via_cover(const Problem& problem, const IntegerVector& u) {
  const double t = t_of_u(problem.psi(), problem.alpha(), u).t;
  const double norm = static_cast<double>(u.sup_norm());
  const int n = problem.n();
  double best = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= n; ++j) {
    const double side = std::pow(t, -problem.beta()[static_cast<std::size_t>(j - 1)]) / norm;
    double total = problem.f()(side);
    for (int ell = 1; ell <= n; ++ell) total *= cover_count(j, ell, t, norm, problem.m(), problem.beta());
    best = std::min(best, total);
  }
  return best;
}

}  // namespace dnlab::content
