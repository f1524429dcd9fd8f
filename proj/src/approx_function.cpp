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

#include "dnlab/approx_function.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "dnlab/errors.hpp"

namespace dnlab {

std::string_view to_string(PsiFamily family) {
  return family == PsiFamily::power ? "power" : "power_log";
}

ApproxFunction::ApproxFunction(PsiFamily family, double c, double sigma, double rho, double t0)
    : family_(family), c_(c), sigma_(sigma), rho_(rho), t0_(t0) {
  if (!(std::isfinite(c) && c > 0.0)) throw ValidationError("psi coefficient c must be > 0");
  if (!(std::isfinite(t0) && t0 >= 2.0)) throw ValidationError("psi domain floor t0 must be >= 2");
  if (!(std::isfinite(sigma) && sigma >= 0.0)) throw ValidationError("psi exponent sigma must be >= 0");
  if (!(std::isfinite(rho) && rho >= 0.0)) throw ValidationError("psi log exponent rho must be >= 0");
  if (family == PsiFamily::power && sigma <= 0.0)
    throw ValidationError("power psi needs sigma > 0");
  if (sigma + rho <= 0.0) throw ValidationError("psi must decrease: sigma + rho > 0");
}

ApproxFunction ApproxFunction::power(double c, double sigma, double t0) {
  return {PsiFamily::power, c, sigma, 0.0, t0};
}

ApproxFunction ApproxFunction::power_log(double c, double sigma, double rho, double t0) {
  return {PsiFamily::power_log, c, sigma, rho, t0};
}

double ApproxFunction::formula(double t) const {
  double value = c_ * std::pow(t, -sigma_);
  if (rho_ != 0.0) value *= std::pow(std::log(t), -rho_);
  return value;
}

double ApproxFunction::operator()(double t) const {
  if (!(t >= t0_)) throw DomainError("psi evaluated below its domain floor t0");
  return formula(t);
}

double ApproxFunction::log_value(double t) const {
  if (!(t >= t0_)) throw DomainError("psi evaluated below its domain floor t0");
  double value = std::log(c_) - sigma_ * std::log(t);
  if (rho_ != 0.0) value -= rho_ * std::log(std::log(t));
  return value;
}

double ApproxFunction::log_inverse(double log_y) const {
  const double log_top = log_value(t0_);
  if (!(log_y <= log_top)) throw DomainError("psi inverse: y above psi(t0)");
  const double target = std::log(c_) - log_y;
  if (rho_ == 0.0) return target / sigma_;

  // Solve g(x) = sigma x + rho ln x - target = 0 for x = ln t; g increases.
  auto g = [&](double x) { return sigma_ * x + rho_ * std::log(x) - target; };
  double lo = std::log(t0_);
  double hi = 2.0 * lo;
  while (g(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw DomainError("psi inverse: bracket overflow");
  }
  for (int iter = 0; iter < 400 && hi - lo > 1e-15 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 3; ++iter) x -= g(x) / (sigma_ + rho_ / x);
  return x;
}

double ApproxFunction::inverse(double y) const {
  if (!(y > 0.0)) throw DomainError("psi inverse: y must be positive");
  if (y > formula(t0_)) throw DomainError("psi inverse: y above psi(t0)");
  if (family_ == PsiFamily::power || rho_ == 0.0) return std::pow(c_ / y, 1.0 / sigma_);
  return std::exp(log_inverse(std::log(y)));
}

double psi_eval(const ApproxFunction& psi, double t) { return psi(t); }

double psi_inverse(const ApproxFunction& psi, double y) { return psi.inverse(y); }

double validate_lambda_decay(const ApproxFunction& psi) {
  const double lambda = std::exp2(psi.sigma());
  if (!(lambda > 1.0 + 1e-9)) {
    throw CertificationError("psi(t)/psi(2t) tends to " + std::to_string(lambda) +
                             ", no lambda > 1 exists");
  }
  return lambda;
}

DualTime t_of_u(const ApproxFunction& psi, const WeightVector& alpha, const IntegerVector& u) {
  if (u.size() != alpha.size()) throw ValidationError("t(u): u and alpha differ in length");
  std::size_t k = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    const double score = std::log(static_cast<double>(std::llabs(u[i]))) / alpha[i];
    if (score > best) {
      best = score;
      k = i;
    }
  }
  DualTime out;
  out.dominant_index = static_cast<int>(k) + 1;
  // psi(t(u)) = |u_k|^{-1/alpha_k}
  const double log_y = -best;
  if (log_y > psi.log_value(psi.domain_floor())) {
    out.t = psi.domain_floor();
    out.clamped = true;
    return out;
  }
  if (psi.rho() == 0.0) {
    const double reach = std::pow(static_cast<double>(std::llabs(u[k])), 1.0 / alpha[k]);
    const double t = std::pow(psi.coefficient() * reach, 1.0 / psi.sigma());
    if (std::isfinite(t) && t > 0.0) {
      out.t = t;
      return out;
    }
  }
  out.t = std::exp(psi.log_inverse(log_y));
  if (!std::isfinite(out.t)) throw DomainError("t(u) overflows a double");
  return out;
}

}  // namespace dnlab
