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

#include <string_view>

#include "dnlab/integer_vector.hpp"
#include "dnlab/weights.hpp"

namespace dnlab {

enum class PsiFamily { power, power_log };

std::string_view to_string(PsiFamily family);

/// psi(t) = c * t^{-sigma} * (ln t)^{-rho} on [t0, inf).
///
/// The power family has rho = 0. For power_log, sigma may be zero as long as
/// rho > 0; such a psi is still decreasing to 0 but fails the lambda-decay
/// certificate.
class ApproxFunction {
 public:
  static ApproxFunction power(double c, double sigma, double t0 = 2.0);
  static ApproxFunction power_log(double c, double sigma, double rho, double t0 = 2.0);

  [[nodiscard]] PsiFamily family() const { return family_; }
  [[nodiscard]] double coefficient() const { return c_; }
  [[nodiscard]] double sigma() const { return sigma_; }
  [[nodiscard]] double rho() const { return rho_; }
  [[nodiscard]] double domain_floor() const { return t0_; }

  /// psi(t) for t >= t0; DomainError below the floor.
  [[nodiscard]] double operator()(double t) const;

  /// ln psi(t), same domain. Used where psi underflows.
  [[nodiscard]] double log_value(double t) const;

  /// The family formula without the domain check, for t > 0 (power) or t > 1
  /// (power_log). Baseline series start below t0 and need this.
  [[nodiscard]] double formula(double t) const;

  /// ln of the inverse: ln t with psi(t) = exp(log_y). Needed when t itself
  /// overflows a double.
  [[nodiscard]] double log_inverse(double log_y) const;

  /// t with psi(t) = y, for 0 < y <= psi(t0). Closed form for the power
  /// family, bracketed bisection on ln t otherwise.
  [[nodiscard]] double inverse(double y) const;

 private:
  ApproxFunction(PsiFamily family, double c, double sigma, double rho, double t0);

  PsiFamily family_;
  double c_;
  double sigma_;
  double rho_;
  double t0_;
};

double psi_eval(const ApproxFunction& psi, double t);
double psi_inverse(const ApproxFunction& psi, double y);

/// Certified lambda = inf_{t >= t0} psi(t)/psi(2t). For this family the ratio
/// is 2^sigma (1 + ln2/ln t)^rho, which decreases to 2^sigma, so the infimum
/// is 2^sigma. Throws CertificationError when it is not above 1 + 1e-9.
double validate_lambda_decay(const ApproxFunction& psi);

struct DualTime {
  double t = 0.0;
  /// t(u) fell below the domain floor and was replaced by t0.
  bool clamped = false;
  /// 1-based index k attaining max_i |u_i|^{1/alpha_i}.
  int dominant_index = 1;
};

/// t(u) = inf{t > 0 : |u_i| < psi(t)^{-alpha_i} for all i}
///      = psi^{-1}(|u_k|^{-1/alpha_k}) with k maximising |u_i|^{1/alpha_i}.
DualTime t_of_u(const ApproxFunction& psi, const WeightVector& alpha, const IntegerVector& u);

}  // namespace dnlab
