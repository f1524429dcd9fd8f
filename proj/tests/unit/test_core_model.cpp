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
#include <set>

#include "doctest.h"
#include "dnlab/approx_function.hpp"
#include "dnlab/dimension_function.hpp"
#include "dnlab/errors.hpp"
#include "dnlab/integer_vector.hpp"
#include "dnlab/problem.hpp"
#include "dnlab/weights.hpp"
#include "support.hpp"

using namespace dnlab;
using doctest::Approx;

TEST_CASE("weight vectors validate sign, sum and order") {
  CHECK_NOTHROW(WeightVector({0.5, 0.5}, Side::alpha));
  CHECK_NOTHROW(WeightVector({0.3, 0.7}, Side::alpha));
  CHECK_THROWS_AS(WeightVector({0.3, 0.7}, Side::beta), ValidationError);
  CHECK_THROWS_AS(WeightVector({0.5, 0.6}, Side::alpha), ValidationError);
  CHECK_THROWS_AS(WeightVector({1.5, -0.5}, Side::alpha), ValidationError);
  CHECK_THROWS_AS(WeightVector({}, Side::alpha), ValidationError);
  const auto w = WeightVector::uniform(4, Side::beta);
  CHECK(w[3] == 0.25);
  CHECK(w.max() == 0.25);
}

TEST_CASE("integer vectors") {
  CHECK_THROWS_AS(IntegerVector({0, 0}), ValidationError);
  const IntegerVector u{3, -7, 2};
  CHECK(u.sup_norm() == 7);
  CHECK((-u)[1] == 7);
  CHECK(u.lex_positive());
  CHECK_FALSE((-u).lex_positive());
  CHECK(IntegerVector({0, -1}).shifted(1, 3) == IntegerVector({0, 2}));
  CHECK_THROWS_AS(IntegerVector({0, -1}).shifted(1, 1), ValidationError);
}

TEST_CASE("shell sizes") {
  CHECK(shell(1, 3).size() == 2);
  CHECK(shell(2, 1).size() == 8);
  CHECK(shell(3, 2).size() == 98);
  CHECK(shell_count(3, 2) == 98);
}

TEST_CASE("shell enumeration matches a box filter") {
  for (int m = 1; m <= 3; ++m) {
    for (std::int64_t r = 1; r <= 4; ++r) {
      std::set<std::vector<std::int64_t>> expected;
      const std::int64_t side = 2 * r + 1;
      std::int64_t total = 1;
      for (int i = 0; i < m; ++i) total *= side;
      for (std::int64_t code = 0; code < total; ++code) {
        std::vector<std::int64_t> v;
        std::int64_t rest = code;
        std::int64_t norm = 0;
        for (int i = 0; i < m; ++i) {
          v.push_back(rest % side - r);
          norm = std::max<std::int64_t>(norm, std::llabs(v.back()));
          rest /= side;
        }
        if (norm == r) expected.insert(v);
      }
      std::vector<std::vector<std::int64_t>> seen;
      for_each_in_shell(m, r, [&](const IntegerVector& u) {
        seen.emplace_back(u.entries().begin(), u.entries().end());
      });
      CHECK(std::is_sorted(seen.begin(), seen.end()));
      CHECK(std::set<std::vector<std::int64_t>>(seen.begin(), seen.end()) == expected);
      CHECK(seen.size() == expected.size());

      std::uint64_t weighted = 0;
      for_each_abs_pattern(m, r, [&](std::span<const std::int64_t> w, std::uint64_t mult) {
        CHECK(*std::max_element(w.begin(), w.end()) == r);
        weighted += mult;
      });
      CHECK(weighted == expected.size());
    }
  }
}

TEST_CASE("psi evaluation") {
  CHECK(psi_eval(ApproxFunction::power(1, 1), 4) == Approx(0.25));
  CHECK(psi_eval(ApproxFunction::power(1, 0.5), 4) == Approx(0.5));
  const double e2 = std::exp(2.0);
  const long double expected = ::expl(-2.0L) / 2.0L;
  CHECK(psi_eval(ApproxFunction::power_log(1, 1, 1), e2) == Approx(static_cast<double>(expected)).epsilon(1e-14));
  CHECK_THROWS_AS(psi_eval(ApproxFunction::power(1, 1), 1.5), DomainError);
  CHECK_THROWS_AS(ApproxFunction::power(1, 0), ValidationError);
  CHECK_THROWS_AS(ApproxFunction::power(-1, 1), ValidationError);
  CHECK_THROWS_AS(ApproxFunction::power(1, 1, 1.5), ValidationError);
}

namespace {

// Bisection on psi(t) = y in long double, independent of the library inverse.
double bisect_inverse(const ApproxFunction& psi, double y) {
  auto value = [&](long double t) {
    return psi.coefficient() * std::pow(t, -static_cast<long double>(psi.sigma())) *
           std::pow(std::log(t), -static_cast<long double>(psi.rho()));
  };
  long double lo = psi.domain_floor();
  long double hi = lo;
  while (value(hi) > y) hi *= 2;
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2;
    (value(mid) > y ? lo : hi) = mid;
  }
  return static_cast<double>(hi);
}

}  // namespace

TEST_CASE("psi inverse") {
  CHECK(psi_inverse(ApproxFunction::power(1, 1), 0.01) == Approx(100));
  CHECK(psi_inverse(ApproxFunction::power(1, 2), 0.04) == Approx(5));
  const auto psi = ApproxFunction::power_log(1, 1, 1);
  const double t = psi_inverse(psi, 0.05);
  CHECK(psi(t) == Approx(0.05).epsilon(1e-12));
  CHECK(t == Approx(bisect_inverse(psi, 0.05)).epsilon(1e-12));
}

TEST_CASE("psi inverse round trip on random members of both families") {
  testing::Draw draw(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const double c = draw.uniform(0.2, 3.0);
    const double sigma = draw.uniform(0.05, 3.0);
    const auto psi = draw.coin() ? ApproxFunction::power(c, sigma)
                                 : ApproxFunction::power_log(c, sigma, draw.uniform(0.0, 2.0));
    const double y = psi(2.0) * std::exp(-draw.uniform(0.0, 20.0));
    const double t = psi_inverse(psi, y);
    CHECK(psi(t) == Approx(y).epsilon(1e-10));
    CHECK(t == Approx(bisect_inverse(psi, y)).epsilon(1e-10));
  }
}

TEST_CASE("lambda decay") {
  CHECK(validate_lambda_decay(ApproxFunction::power(1, 1)) == Approx(2));
  CHECK(validate_lambda_decay(ApproxFunction::power(1, 0.5)) == Approx(1.41421356));
  const auto flat = ApproxFunction::power_log(1, 0, 1);
  CHECK_THROWS_AS(validate_lambda_decay(flat), CertificationError);
  // The ratio along t = 2^k tends to 1.
  double previous = 10.0;
  for (int k = 1; k <= 60; ++k) {
    const double t = std::ldexp(1.0, k);
    const double ratio = flat(t) / flat(2 * t);
    CHECK(ratio < previous);
    previous = ratio;
  }
  CHECK(previous < 1.03);
}

TEST_CASE("dual time t(u)") {
  CHECK(t_of_u(ApproxFunction::power(1, 1), WeightVector({0.5, 0.5}, Side::alpha), {4, 9}).t == Approx(81));
  const auto dt = t_of_u(ApproxFunction::power(1, 2), WeightVector({1.0}, Side::alpha), {5});
  CHECK(dt.t == Approx(2.23606798));
  CHECK_FALSE(dt.clamped);
  const auto psi = ApproxFunction::power_log(1, 1, 1);
  CHECK(t_of_u(psi, WeightVector({1.0}, Side::alpha), {50}).t == Approx(bisect_inverse(psi, 1.0 / 50)).epsilon(1e-10));
  CHECK(t_of_u(ApproxFunction::power(1, 1), WeightVector({1.0}, Side::alpha), {1}).clamped);
}

TEST_CASE("t(u) is the infimum of the visibility condition") {
  testing::Draw draw(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = static_cast<std::size_t>(draw.integer(1, 3));
    const auto alpha = draw.weights(m, Side::alpha);
    const auto psi = ApproxFunction::power(draw.uniform(0.5, 2.0), draw.uniform(0.2, 3.0));
    const IntegerVector u(draw.nonzero_vector(m, 200));
    auto visible = [&](long double t) {
      const long double p = psi.coefficient() * std::pow(t, -static_cast<long double>(psi.sigma()));
      for (std::size_t i = 0; i < m; ++i) {
        if (!(std::llabs(u[i]) < std::pow(p, -static_cast<long double>(alpha[i])))) return false;
      }
      return true;
    };
    long double lo = 1e-6L;
    long double hi = 1.0L;
    while (!visible(hi)) hi *= 2;
    for (int i = 0; i < 200; ++i) {
      const long double mid = (lo + hi) / 2;
      (visible(mid) ? hi : lo) = mid;
    }
    const auto dt = t_of_u(psi, alpha, u);
    const double oracle = std::max(static_cast<double>(hi), psi.domain_floor());
    CHECK(dt.t == Approx(oracle).epsilon(1e-9));
    CHECK(dt.clamped == (static_cast<double>(hi) < psi.domain_floor() * (1 - 1e-12)));
  }
}

TEST_CASE("dimension function bracket") {
  CHECK(f_bracket(DimensionFunction::power(1.5), 1, 2) == 1);
  CHECK(f_bracket(DimensionFunction::power(4.2), 2, 3) == 2);
  CHECK_THROWS_AS(f_bracket(DimensionFunction::power(2.0), 1, 2), BracketError);
  CHECK_THROWS_AS(f_bracket(DimensionFunction::power(0.5), 1, 2), BracketError);
  CHECK_THROWS_AS(f_bracket(DimensionFunction::power(0.5), 1, 1), ValidationError);
  CHECK(DimensionFunction::power(2.0)(0.0) == 0.0);
  CHECK_THROWS_AS(DimensionFunction::power(0.0), ValidationError);
  CHECK(DimensionFunction::power(2.0)(0.5) == Approx(0.25));
}

TEST_CASE("bracket agrees with grid monotonicity of f(r)/r^K") {
  testing::Draw draw(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = static_cast<int>(draw.integer(1, 3));
    const int n = static_cast<int>(draw.integer(2, 3));
    const int mn = m * n;
    const double s = draw.uniform(mn - n + 1.01, mn - 0.01);
    const double tau = draw.coin() ? 0.0 : draw.uniform(-0.5, 0.5);
    const auto f = tau == 0.0 ? DimensionFunction::power(s) : DimensionFunction::power_log(s, tau);
    int a = 0;
    try {
      a = f_bracket(f, m, n);
    } catch (const BracketError&) {
      // Only a log factor can push the exponent band across an integer.
      CHECK(tau != 0.0);
      CHECK(std::ceil(f.exponent_low()) < f.exponent_high() + 1e-12);
      continue;
    }
    const int K = mn - a;
    double previous_low = -HUGE_VAL;
    double previous_high = HUGE_VAL;
    for (double log_r = -700; log_r <= 3; log_r += 0.37) {
      const double r = std::exp(log_r);
      const double low = f.log_value(r) - K * log_r;         // non-decreasing
      const double high = f.log_value(r) - (K + 1) * log_r;  // non-increasing
      CHECK(low >= previous_low - 1e-9 * std::abs(low));
      CHECK(high <= previous_high + 1e-9 * std::abs(high));
      previous_low = low;
      previous_high = high;
    }
  }
}

TEST_CASE("problem construction checks the hypotheses") {
  const auto alpha = WeightVector::uniform(1, Side::alpha);
  CHECK(Problem(alpha, WeightVector::uniform(2, Side::beta), ApproxFunction::power(1, 0.5),
                DimensionFunction::power(1.8))
            .bracket() == 1);
  CHECK_THROWS_AS(Problem(alpha, WeightVector::uniform(1, Side::beta), ApproxFunction::power(1, 0.5),
                          DimensionFunction::power(0.5)),
                  ValidationError);
  CHECK_THROWS_AS(Problem(WeightVector::uniform(1, Side::beta), WeightVector::uniform(2, Side::beta),
                          ApproxFunction::power(1, 0.5), DimensionFunction::power(1.8)),
                  ValidationError);
}
