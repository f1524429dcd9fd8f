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

#include <cmath>
#include <numeric>

#include "doctest.h"
#include "dnlab/errors.hpp"
#include "dnlab/limsup.hpp"
#include "dnlab/series.hpp"
#include "support.hpp"

using namespace dnlab;
using namespace dnlab::limsup;
using doctest::Approx;

namespace {

DivergenceSetup reference_setup() {
  return DivergenceSetup(Problem(WeightVector::uniform(1, Side::alpha), WeightVector::uniform(2, Side::beta),
                                 ApproxFunction::power(1, 0.5), DimensionFunction::power(1.8)),
                         {0.3});
}

// Fraction of midpoints (k + 1/2)/N in [0, 1] that lie in R'(u, delta), a
// Riemann-sum oracle independent of the interval bookkeeping.
double grid_measure(std::int64_t u, double delta, std::int64_t u2 = 0, double delta2 = 0.0) {
  constexpr int N = 400000;
  int hits = 0;
  for (int k = 0; k < N; ++k) {
    const double x[] = {(k + 0.5) / N};
    const double d1[] = {delta};
    bool in = rprime_membership(x, 1, 1, IntegerVector{u}, d1);
    if (in && u2 != 0) {
      const double d2[] = {delta2};
      in = rprime_membership(x, 1, 1, IntegerVector{u2}, d2);
    }
    hits += in ? 1 : 0;
  }
  return static_cast<double>(hits) / N;
}

}  // namespace

TEST_CASE("totients against gcd counting") {
  const auto phi = totients(500);
  CHECK(phi[0] == 0);
  CHECK(phi[1] == 1);
  for (std::int64_t u = 1; u <= 500; ++u) {
    std::int64_t count = 0;
    for (std::int64_t v = 1; v <= u; ++v) count += std::gcd(u, v) == 1 ? 1 : 0;
    CHECK(phi[static_cast<std::size_t>(u)] == count);
  }
}

TEST_CASE("totient density") {
  CHECK(totient_density(1.0, 1000) == Approx(1.0 / 1000));
  const double at2 = totient_density(2.0, 100000);
  CHECK(at2 > 0.0);
  CHECK(at2 < 1.0);
  double previous = 0.0;
  for (double a = 1.5; a <= 8.0; a += 0.5) {
    const double d = totient_density(a, 20000);
    CHECK(d >= previous);
    previous = d;
  }
  CHECK(std::abs(totient_density(2.0, 100000) - totient_density(2.0, 200000)) <= 0.01);
  CHECK(std::abs(totient_density(4.0, 100000) - totient_density(4.0, 200000)) <= 0.01);
}

TEST_CASE("gamma shells") {
  const auto g = gamma_set(5, std::vector<double>{0.3});
  REQUIRE(g.size() == 1);
  CHECK(g[0] == IntegerVector{5});
  const std::vector<double> b = {0.3, 0.45};
  for (std::int64_t r = 1; r <= 12; ++r) {
    const auto set = gamma_set(r, b);
    CHECK(set.size() <= shell_count(2, r) / 2);
    for (const auto& u : set) {
      CHECK(std::find(set.begin(), set.end(), -u) == set.end());
      CHECK(transfer::dual_distance(u, b) > transfer::epsilon_b(b));
    }
  }
  // b = (0.01): eps = 0.0025 and ||2 b|| = 0.02, so the shell keeps u = 2.
  CHECK(gamma_set(2, std::vector<double>{0.01}).size() == 1);
}

TEST_CASE("delta neighbourhoods and R'") {
  const IntegerVector two{2};
  CHECK(delta_membership(std::vector<double>{0.5}, two, 1, 0.1));
  CHECK(delta_membership(std::vector<double>{0.46}, two, 1, 0.1));
  CHECK_FALSE(delta_membership(std::vector<double>{0.40}, two, 1, 0.1));

  const std::vector<double> delta = {0.1};
  CHECK(rprime_membership(std::vector<double>{0.5}, 1, 1, two, delta));
  CHECK_FALSE(rprime_membership(std::vector<double>{0.98}, 1, 1, two, delta));
  // u = (2, 4) is even, so the nearest v must be odd: 0.25*2 + 0.125*4 = 1.
  CHECK(rprime_membership(std::vector<double>{0.25, 0.125}, 2, 1, IntegerVector{2, 4}, delta));
  CHECK_FALSE(rprime_membership(std::vector<double>{0.5, 0.25}, 2, 1, IntegerVector{2, 4}, delta));
  CHECK_THROWS_AS(rprime_membership(std::vector<double>{0.5}, 1, 1, two, std::vector<double>{0.5}),
                  DomainError);
}

TEST_CASE("exact R' measures") {
  CHECK(rprime_measure_exact_1d(2, 0.1) == Approx(0.1));
  CHECK(rprime_measure_exact_1d(3, 0.1) == Approx(2 * 2 * 0.1 / 3));
  CHECK(rprime_measure_exact_1d(-3, 0.1) == Approx(2 * 2 * 0.1 / 3));
  // u = 1: v = 0 and v = 1 each contribute a clipped half interval.
  CHECK(rprime_measure_exact_1d(1, 0.2) == Approx(0.4));

  testing::Draw draw(51);
  for (int trial = 0; trial < 15; ++trial) {
    const std::int64_t u = draw.integer(1, 40);
    const double delta = draw.uniform(0.01, 0.45);
    CHECK(rprime_measure_exact_1d(u, delta) == Approx(grid_measure(u, delta)).epsilon(1e-3));
    const std::int64_t u2 = draw.integer(1, 40);
    const double delta2 = draw.uniform(0.01, 0.45);
    CHECK(rprime_intersection_exact_1d(u, delta, u2, delta2) ==
          Approx(grid_measure(u, delta, u2, delta2)).epsilon(2e-3));
  }
  const double both = rprime_intersection_exact_1d(2, 0.05, 3, 0.05);
  CHECK(both == Approx(grid_measure(2, 0.05, 3, 0.05)).epsilon(1e-3));
}

TEST_CASE("rung index and varpi at a worked example") {
  const auto setup = reference_setup();
  const IntegerVector u{9};
  const double t = 81.0;  // 9 < t^{1/2}
  const double x = setup.c_tilde() * std::pow(t, -0.5) / 9.0;
  const double gamma = series::gamma_u(setup.problem, u).gamma;
  // Equal beta: both rungs equal x^2, so k = 2 as soon as gamma >= x^2.
  REQUIRE(gamma >= x * x);
  CHECK(k_of_u(setup, u) == 2);
  CHECK(varpi_u(setup, u) == Approx(std::sqrt(gamma)).epsilon(1e-12));

  const auto p = phi_profile(setup, u);
  CHECK(p.active);
  const auto check = check_phi_profile(setup, p);
  CHECK(check.sandwich);
  CHECK(check.chain);
  CHECK(check.product_error <= kProductTolerance);
}

TEST_CASE("inactive vectors get the zero profile") {
  const DivergenceSetup setup(Problem(WeightVector::uniform(1, Side::alpha), WeightVector::uniform(2, Side::beta),
                                      ApproxFunction::power(1, 0.5), DimensionFunction::power(1.8)),
                              {0.5});
  // ||2 * 0.5|| = 0 <= eps.
  const auto p = phi_profile(setup, {2});
  CHECK_FALSE(p.active);
  CHECK(p.phi == std::vector<double>{0.0, 0.0});
  CHECK(check_phi_profile(setup, p).ok());
  CHECK_THROWS_AS(inner_rectangle(setup, {2}), DomainError);
}

TEST_CASE("profile invariants on random weighted setups") {
  testing::Draw draw(52);
  for (int trial = 0; trial < 6; ++trial) {
    const int m = static_cast<int>(draw.integer(1, 2));
    const int n = static_cast<int>(draw.integer(2, 3));
    const int mn = m * n;
    std::vector<double> b(static_cast<std::size_t>(m));
    for (auto& x : b) x = draw.uniform(0.05, 0.95);
    const DivergenceSetup setup(
        Problem(draw.weights(static_cast<std::size_t>(m), Side::alpha),
                draw.weights(static_cast<std::size_t>(n), Side::beta),
                ApproxFunction::power(1, draw.uniform(0.3, 3.0)),
                DimensionFunction::power(draw.uniform(mn - n + 1.01, mn - 0.01))),
        b);
    const auto scan = phi_scan(setup, m == 1 ? 256 : 24, 2);
    CHECK(scan.violations == 0);
    CHECK(scan.active > 0);
    CHECK(scan.worst_product_error <= kProductTolerance);
    REQUIRE(scan.min_content_ratio.has_value());
    CHECK(*scan.min_content_ratio > 0.0);
  }
}

TEST_CASE("inner rectangle structure") {
  const auto setup = reference_setup();
  const auto rect = inner_rectangle(setup, {9});
  // m = 1, k = n: the sides are c~ t^{-beta_j}/|u|.
  const double side = setup.c_tilde() * std::pow(81.0, -0.5) / 9.0;
  REQUIRE(rect.dimension() == 2);
  CHECK(rect[0] == Approx(side));
  CHECK(rect[1] == Approx(side));

  const DivergenceSetup wide(Problem(WeightVector::uniform(2, Side::alpha), WeightVector({0.7, 0.3}, Side::beta),
                                     ApproxFunction::power(1, 1.0), DimensionFunction::power(3.5)),
                             {0.3, 0.45});
  for (std::int64_t r = 1; r <= 6; ++r) {
    for (const auto& u : gamma_set(r, wide.b)) {
      const auto p = phi_profile(wide, u);
      const auto box = inner_rectangle(wide, u);
      CHECK(box.dimension() == 4);
      const auto sides = box.sides();
      CHECK(std::count_if(sides.begin(), sides.end(), [&](double s) { return s == p.varpi; }) >= 4 - p.k);
    }
  }
}

TEST_CASE("lambda selection") {
  const auto setup = reference_setup();
  const auto sel = lambda_selection(setup, 512, 4.0, 2);
  CHECK_FALSE(sel.members.empty());
  CHECK(sel.density > 0.0);
  CHECK(sel.ratio > 0.0);
  CHECK(sel.rows.size() == 512);
  for (const auto& row : sel.rows) {
    CHECK(row.active_sum <= row.shell_sum * (1 + 1e-12));
    // Every active u pairs with its negative, so Gamma keeps half the mass
    // (prod phi = gamma |u|^n there).
    CHECK(row.gamma_set_sum == Approx(row.active_sum / 2).epsilon(1e-9));
  }
  CHECK_THROWS_AS(lambda_selection(setup, 512, 1.2, 2), DomainError);
}

TEST_CASE("quasi-independence on exact pairs") {
  const auto setup = reference_setup();
  std::vector<std::pair<IntegerVector, IntegerVector>> pairs = {{IntegerVector{2}, IntegerVector{3}},
                                                               {IntegerVector{4}, IntegerVector{8}}};
  const auto report = quasi_independence_scan(setup, pairs, 10000, 1, 1);
  CHECK(report.method == MeasureMethod::exact);
  for (const auto& e : report.entries) {
    CHECK(e.ratio == Approx(e.intersection / (e.measure1 * e.measure2)));
    CHECK(e.sandwich_ok);
    CHECK(std::isfinite(e.ratio));
  }
  std::vector<std::pair<IntegerVector, IntegerVector>> bad = {{IntegerVector{3}, IntegerVector{-3}}};
  CHECK_THROWS_AS(quasi_independence_scan(setup, bad, 10000, 1, 1), ValidationError);

  const auto drawn = qi_pairs(setup, 64, 50, 7);
  CHECK(drawn.size() == 50);
  for (const auto& [a, b] : drawn) CHECK_FALSE((a == b || a == -b));
}

TEST_CASE("quasi-independence by Monte Carlo") {
  const DivergenceSetup setup(Problem(WeightVector::uniform(2, Side::alpha), WeightVector::uniform(2, Side::beta),
                                      ApproxFunction::power(1, 2.0), DimensionFunction::power(3.5)),
                              {0.3, 0.45});
  const IntegerVector u{1, 1};
  std::vector<std::pair<IntegerVector, IntegerVector>> pairs = {{u, IntegerVector{2, 2}}};
  const auto report = quasi_independence_scan(setup, pairs, 50000, 3, 2);
  CHECK(report.method == MeasureMethod::monte_carlo);
  CHECK(report.entries.size() + static_cast<std::size_t>(report.skipped_degenerate + report.skipped_wide) == 1);
  for (const auto& e : report.entries) CHECK(std::isfinite(e.ratio));
}
