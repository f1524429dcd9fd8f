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

#include "dnlab/dimension_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dnlab/errors.hpp"

namespace dnlab {

std::string_view to_string(DimFamily family) {
  return family == DimFamily::power ? "power" : "power_log";
}

DimensionFunction::DimensionFunction(DimFamily family, double s, double tau, double knee)
    : family_(family), s_(s), tau_(tau), knee_(knee) {
  if (!(std::isfinite(s) && s > 0.0)) throw ValidationError("dimension exponent s must be > 0");
  if (!std::isfinite(tau)) throw ValidationError("dimension log exponent must be finite");
  if (!(knee > 0.0 && knee < 1.0)) throw ValidationError("dimension knee must lie in (0, 1)");
  if (exponent_low() < 0.0)
    throw ValidationError("dimension function is not non-decreasing below the knee");
}

DimensionFunction DimensionFunction::power(double s) {
  return {DimFamily::power, s, 0.0, std::exp(-1.0)};
}

DimensionFunction DimensionFunction::power_log(double s, double tau, std::optional<double> knee) {
  const double k = knee.value_or(std::exp(-std::max(1.0, 10.0 * std::abs(tau))));
  return {DimFamily::power_log, s, tau, k};
}

double DimensionFunction::operator()(double r) const {
  if (r < 0.0) throw DomainError("dimension function evaluated at negative r");
  if (r == 0.0) return 0.0;
  double value = std::pow(r, s_);
  if (tau_ != 0.0) value *= std::pow(-std::log(std::min(r, knee_)), tau_);
  return value;
}

double DimensionFunction::log_value(double r) const {
  if (!(r > 0.0)) throw DomainError("log f needs r > 0");
  double value = s_ * std::log(r);
  if (tau_ != 0.0) value += tau_ * std::log(-std::log(std::min(r, knee_)));
  return value;
}

double DimensionFunction::exponent_low() const {
  return tau_ > 0.0 ? s_ - tau_ / -std::log(knee_) : s_;
}

double DimensionFunction::exponent_high() const {
  return tau_ < 0.0 ? s_ - tau_ / -std::log(knee_) : s_;
}

bool DimensionFunction::below(double t) const { return exponent_high() <= t; }

bool DimensionFunction::above(double t) const { return exponent_low() >= t; }

bool DimensionFunction::strictly_below(double t) const {
  return below(t) && (s_ < t || (s_ == t && tau_ > 0.0));
}

bool DimensionFunction::strictly_above(double t) const {
  return above(t) && (s_ > t || (s_ == t && tau_ < 0.0));
}

std::optional<int> DimensionFunction::integer_bracket(int k_min, int k_max) const {
  const int top = std::min(k_max, static_cast<int>(std::floor(exponent_low())));
  for (int k = top; k >= k_min; --k) {
    if (above(k) && below(k + 1)) return k;
  }
  return std::nullopt;
}

int f_bracket(const DimensionFunction& f, int m, int n) {
  if (m < 1) throw ValidationError("m must be >= 1");
  if (n < 2) {
    throw ValidationError(
        "n >= 2 required: the bracket (mn-a) ⪯ f ⪯ (mn-a+1) needs some 1 <= a <= n-1");
  }
  const int mn = m * n;
  std::ostringstream why;
  if (!f.strictly_below(mn)) {
    why << "f ≺ mn fails: f(r)/r^" << mn << " does not tend to infinity (s = " << f.exponent()
        << ", tau = " << f.log_exponent() << ")";
    throw BracketError(why.str());
  }
  if (auto k = f.integer_bracket(mn - n + 1, mn - 1)) return mn - *k;
  if (!f.above(mn - n + 1)) {
    why << "(mn-a) ⪯ f fails for every 1 <= a <= n-1: local exponent reaches "
        << f.exponent_low() << " < " << (mn - n + 1);
  } else {
    why << "f ⪯ (mn-a+1) fails: exponent band [" << f.exponent_low() << ", "
        << f.exponent_high() << "] straddles an integer";
  }
  throw BracketError(why.str());
}

}  // namespace dnlab
