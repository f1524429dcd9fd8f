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

#include "dnlab/transference.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "dnlab/errors.hpp"

namespace dnlab::transfer {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) throw ValidationError("matrix must be non-empty");
  if (values_.size() != rows_ * cols_) throw ValidationError("matrix data does not match its shape");
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ValidationError("matrix must be non-empty");
  std::vector<double> values;
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) throw ValidationError("ragged matrix rows");
    values.insert(values.end(), row.begin(), row.end());
  }
  return {rows.size(), rows.front().size(), std::move(values)};
}

double Matrix::column_dot(std::size_t j, const IntegerVector& u) const {
  if (u.size() != rows_) throw ValidationError("column_dot: u has the wrong length");
  double total = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) total += (*this)(i, j) * static_cast<double>(u[i]);
  return total;
}

AffineSystem::AffineSystem(Matrix A_, std::vector<double> b_, WeightVector alpha_,
                           WeightVector beta_)
    : A(std::move(A_)), b(std::move(b_)), alpha(std::move(alpha_)), beta(std::move(beta_)) {
  if (b.size() != A.rows()) throw ValidationError("b must have m entries");
  if (alpha.size() != A.rows()) throw ValidationError("alpha must have m entries");
  if (beta.size() != A.cols()) throw ValidationError("beta must have n entries");
}

double nearest_int_dist(double x) { return std::abs(x - std::nearbyint(x)); }

double dual_distance(const IntegerVector& u, std::span<const double> b) {
  if (u.size() != b.size()) throw ValidationError("u and b differ in length");
  double dot = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) dot += static_cast<double>(u[i]) * b[i];
  return nearest_int_dist(dot);
}

int epsilon_index(std::span<const double> b) {
  int best = 0;
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double d = nearest_int_dist(b[i]);
    if (d > 0.0 && d < smallest) {
      smallest = d;
      best = static_cast<int>(i) + 1;
    }
  }
  if (best == 0) throw DomainError("epsilon(b) undefined: b is integral (homogeneous case)");
  return best;
}

double epsilon_b(std::span<const double> b) {
  return nearest_int_dist(b[static_cast<std::size_t>(epsilon_index(b) - 1)]) / 4.0;
}

int tau_for_distance(double distance, double lambda, const WeightVector& alpha, int n) {
  if (!(distance > 0.0)) throw DomainError("tau(b, u) needs ||u . b|| > 0");
  if (!(lambda > 1.0)) throw DomainError("tau(b, u) needs lambda > 1");
  const double m_plus_n = static_cast<double>(alpha.size()) + n;
  const double target = distance / m_plus_n;
  auto ok = [&](int tau) {
    for (double a : alpha.values()) {
      if (!(std::pow(lambda, -tau * a) < target)) return false;
    }
    return true;
  };
  // tau > ln((m+n)/d) / (alpha_i ln lambda) for all i.
  int tau = static_cast<int>(std::floor(std::log(1.0 / target) / (alpha.min() * std::log(lambda)))) + 1;
  while (ok(tau - 1)) --tau;
  while (!ok(tau)) ++tau;
  return tau;
}

int tau_b_u(std::span<const double> b, const IntegerVector& u, double lambda,
            const WeightVector& alpha, int n) {
  return tau_for_distance(dual_distance(u, b), lambda, alpha, n);
}

int tau_const(double lambda, const WeightVector& alpha, int n) {
  if (!(lambda > 1.0)) throw DomainError("tau needs lambda > 1");
  double factorial = 1.0;
  for (int k = 2; k <= static_cast<int>(alpha.size()) + n; ++k) factorial *= k;
  const double target = factorial * factorial;
  auto ok = [&](int tau) {
    for (double a : alpha.values()) {
      if (!(std::pow(lambda, tau * a) >= target)) return false;
    }
    return true;
  };
  int tau = static_cast<int>(std::ceil(std::log(target) / (alpha.min() * std::log(lambda))));
  tau = std::max(tau, 1);
  while (tau > 1 && ok(tau - 1)) --tau;
  while (!ok(tau)) ++tau;
  return tau;
}

TransferConstants transfer_constants(std::span<const double> b, double lambda,
                                     const WeightVector& alpha, const WeightVector& beta) {
  TransferConstants k;
  const int n = static_cast<int>(beta.size());
  k.eps_b = epsilon_b(b);
  k.c_b = tau_for_distance(k.eps_b, lambda, alpha, n);
  k.tau_const = tau_const(lambda, alpha, n);
  k.c_tilde = k.eps_b * std::exp2(-k.c_b * beta.max()) / (static_cast<double>(alpha.size()) + n);
  return k;
}

namespace {

// 0, 1, -1, 2, -2, ...
std::int64_t zigzag(std::int64_t index) { return index % 2 == 1 ? (index + 1) / 2 : -(index / 2); }

}  // namespace

std::optional<std::vector<std::int64_t>> find_witness(const AffineSystem& sys,
                                                      const WitnessQuery& query) {
  const std::size_t m = sys.m();
  const std::size_t n = sys.n();
  std::vector<std::int64_t> reach(n);
  double points = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double bound = std::pow(query.t, sys.beta[j]);
    reach[j] = query.strict_size.value_or(query.strict) ? static_cast<std::int64_t>(std::ceil(bound)) - 1
                            : static_cast<std::int64_t>(std::floor(bound));
    reach[j] = std::max<std::int64_t>(reach[j], 0);
    points *= static_cast<double>(2 * reach[j] + 1);
  }
  if (points > static_cast<double>(kEnumerationBudget)) {
    std::ostringstream why;
    why << "enumeration budget exceeded: " << points << " lattice points > " << kEnumerationBudget;
    throw BudgetError(why.str());
  }
  std::vector<double> tolerance(m);
  for (std::size_t i = 0; i < m; ++i) tolerance[i] = std::pow(query.c, sys.alpha[i]);

  std::vector<std::int64_t> index(n, 0);
  std::vector<std::int64_t> q(n, 0);
  while (true) {
    // Advance the odometer; the last coordinate is least significant.
    std::size_t j = n;
    while (j > 0 && index[j - 1] == 2 * reach[j - 1]) {
      index[j - 1] = 0;
      --j;
    }
    if (j == 0) return std::nullopt;
    ++index[j - 1];
    for (std::size_t k = 0; k < n; ++k) q[k] = zigzag(index[k]);

    bool good = true;
    for (std::size_t i = 0; i < m && good; ++i) {
      double value = sys.b[i];
      for (std::size_t k = 0; k < n; ++k) value += sys.A(i, k) * static_cast<double>(q[k]);
      const double d = nearest_int_dist(value);
      good = query.strict ? d < tolerance[i] : d <= tolerance[i];
    }
    if (good) return q;
  }
}

DirichletResult is_dirichlet_at_t(const AffineSystem& sys, const ApproxFunction& psi, double t) {
  const double c = psi(t);
  auto witness = find_witness(sys, WitnessQuery{c, t, true});
  return {witness.has_value(), std::move(witness)};
}

bool dual_condition(const AffineSystem& sys, const ApproxFunction& psi, const IntegerVector& u,
                    double c, double t_scale) {
  const double t = t_scale * t_of_u(psi, sys.alpha, u).t;
  for (std::size_t j = 0; j < sys.n(); ++j) {
    if (!(nearest_int_dist(sys.A.column_dot(j, u)) < c * std::pow(t, -sys.beta[j]))) return false;
  }
  return true;
}

double transference_scale(const AffineSystem& sys, double c, double t, const IntegerVector& u) {
  double scale = 0.0;
  for (std::size_t j = 0; j < sys.n(); ++j)
    scale = std::max(scale, std::pow(t, sys.beta[j]) * nearest_int_dist(sys.A.column_dot(j, u)));
  for (std::size_t i = 0; i < sys.m(); ++i)
    scale = std::max(scale, std::pow(c, sys.alpha[i]) * std::abs(static_cast<double>(u[i])));
  return scale;
}

bool forward_transference_holds(const AffineSystem& sys, double c, double t,
                                const IntegerVector& u) {
  const double m_plus_n = static_cast<double>(sys.m() + sys.n());
  return dual_distance(u, sys.b) <= m_plus_n * transference_scale(sys, c, t, u);
}

BackwardScan cassels_backward_scan(const AffineSystem& sys, double c, double t,
                                   std::int64_t u_range) {
  if (u_range < 1) throw DomainError("backward scan needs u_range >= 1");
  const int m = static_cast<int>(sys.m());
  const int mn = m + static_cast<int>(sys.n());
  double box = 1.0;
  for (int i = 0; i < m; ++i) box *= static_cast<double>(2 * u_range + 1);
  if (box > static_cast<double>(kEnumerationBudget))
    throw BudgetError("enumeration budget exceeded by the backward scan range");
  double factorial = 1.0;
  for (int k = 2; k <= mn; ++k) factorial *= k;
  const double factor = std::exp2(mn - 1) / (factorial * factorial);

  BackwardScan scan;
  scan.range = u_range;
  for (std::int64_t r = 1; r <= u_range && scan.hypothesis_holds_on_range; ++r) {
    for_each_in_shell(m, r, [&](const IntegerVector& u) {
      if (!scan.hypothesis_holds_on_range) return;
      if (dual_distance(u, sys.b) > factor * transference_scale(sys, c, t, u)) {
        scan.hypothesis_holds_on_range = false;
        scan.counterexample = u;
      }
    });
  }
  if (scan.hypothesis_holds_on_range) {
    scan.conclusion_found = find_witness(sys, WitnessQuery{c, t, false}).has_value();
    scan.range_artifact = !*scan.conclusion_found;
  }
  return scan;
}

IntegerVector shift_to_active(const IntegerVector& u, std::span<const double> b) {
  if (dual_distance(u, b) > epsilon_b(b)) return u;
  return u.shifted(static_cast<std::size_t>(epsilon_index(b) - 1), 1);
}

}  // namespace dnlab::transfer
