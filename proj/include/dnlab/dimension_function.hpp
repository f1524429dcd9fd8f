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

#include <optional>
#include <string>
#include <string_view>

namespace dnlab {

enum class DimFamily { power, power_log };

std::string_view to_string(DimFamily family);

/// f(r) = r^s * (ln(1/min(r, knee)))^tau, f(0) = 0.
///
/// Below the knee this is the usual r^s (log 1/r)^tau; above it f continues
/// as a pure power with exponent s, which keeps f continuous and its local
/// exponent d ln f / d ln r inside the band [exponent_low, exponent_high]
/// everywhere. All comparability relations are decided from that band.
class DimensionFunction {
 public:
  static DimensionFunction power(double s);
  /// `knee` defaults to exp(-max(1, 10|tau|)), which keeps the exponent band
  /// no wider than 0.1.
  static DimensionFunction power_log(double s, double tau,
                                     std::optional<double> knee = std::nullopt);

  [[nodiscard]] DimFamily family() const { return family_; }
  [[nodiscard]] double exponent() const { return s_; }
  [[nodiscard]] double log_exponent() const { return tau_; }
  [[nodiscard]] double knee() const { return knee_; }

  [[nodiscard]] double operator()(double r) const;
  /// ln f(r) for r > 0.
  [[nodiscard]] double log_value(double r) const;

  /// Range of the local exponent over (0, inf).
  [[nodiscard]] double exponent_low() const;
  [[nodiscard]] double exponent_high() const;

  /// f ⪯ t: f(y)/y^t <= f(x)/x^t for all 0 < x < y.
  [[nodiscard]] bool below(double t) const;
  /// t ⪯ f.
  [[nodiscard]] bool above(double t) const;
  /// f ≺ t: f ⪯ t and f(r)/r^t -> inf as r -> 0.
  [[nodiscard]] bool strictly_below(double t) const;
  /// t ≺ f: t ⪯ f and f(r)/r^t -> 0 as r -> 0.
  [[nodiscard]] bool strictly_above(double t) const;

  /// Largest integer K in [k_min, k_max] with K ⪯ f ⪯ K+1, if any.
  [[nodiscard]] std::optional<int> integer_bracket(int k_min, int k_max) const;

 private:
  DimensionFunction(DimFamily family, double s, double tau, double knee);

  DimFamily family_;
  double s_;
  double tau_;
  double knee_;
};

/// The a in [1, n-1] with (mn-a) ⪯ f ⪯ (mn-a+1), smallest when several
/// qualify. Also requires f ≺ mn. Throws BracketError naming the failing
/// relation, or ValidationError when n < 2.
int f_bracket(const DimensionFunction& f, int m, int n);

}  // namespace dnlab
