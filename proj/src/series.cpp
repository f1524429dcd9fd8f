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

#include "dnlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "dnlab/errors.hpp"
#include "dnlab/parallel.hpp"

namespace dnlab::series {

LogGamma log_gamma_at(const Problem& problem, double t, double norm) {
  const int m = problem.m();
  const int n = problem.n();
  const auto& beta = problem.beta();
  const double log_t = std::log(t);
  const double log_norm = std::log(norm);
  LogGamma best{std::numeric_limits<double>::infinity(), 1};
  for (int j = 0; j < n; ++j) {
    const double bj = beta[static_cast<std::size_t>(j)];
    const double log_x = -bj * log_t - log_norm;
    double value = problem.f().log_value(std::exp(log_x)) + (1.0 - m) * n * log_x;
    for (int l = j; l < n; ++l) value += (bj - beta[static_cast<std::size_t>(l)]) * log_t;
    if (value < best.log_gamma) best = {value, j + 1};
  }
  return best;
}

GammaTerm gamma_u(const Problem& problem, const IntegerVector& u) {
  const DualTime time = t_of_u(problem.psi(), problem.alpha(), u);
  const double norm = static_cast<double>(u.sup_norm());
  const LogGamma lg = log_gamma_at(problem, time.t, norm);
  double log_floor = 0.0;
  for (double bj : problem.beta().values()) log_floor += -bj * std::log(time.t) - std::log(norm);
  return GammaTerm{u, time.t, time.clamped, std::exp(lg.log_gamma), lg.argmin_j,
                   lg.log_gamma > log_floor};
}

double shell_sum(const Problem& problem, std::int64_t r) {
  if (r < 1) throw DomainError("shell_sum needs r >= 1");
  double total = 0.0;
  for_each_abs_pattern(problem.m(), r, [&](std::span<const std::int64_t> w, std::uint64_t mult) {
    const IntegerVector u(std::vector<std::int64_t>(w.begin(), w.end()));
    const double t = t_of_u(problem.psi(), problem.alpha(), u).t;
    total += static_cast<double>(mult) *
             std::exp(log_gamma_at(problem, t, static_cast<double>(r)).log_gamma);
  });
  return total * std::pow(static_cast<double>(r), problem.n());
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::converges: return "converges";
    case Verdict::diverges: return "diverges";
    case Verdict::undetermined: break;
  }
  return "undetermined";
}

Verdict classify_exponent(double exponent, double margin) {
  if (exponent < -1.0 - margin) return Verdict::converges;
  if (exponent > -1.0 + margin) return Verdict::diverges;
  return Verdict::undetermined;
}

namespace {

int complete_blocks(std::int64_t r_max) {
  int blocks = 0;
  while ((std::int64_t{2} << blocks) - 1 <= r_max) ++blocks;
  return blocks;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}

}  // namespace

SeriesReport series_verdict(const Problem& problem, std::int64_t r_max, int workers) {
  if (r_max < 256) {
    std::ostringstream why;
    why << "insufficient data: r_max = " << r_max << " < 256";
    throw DomainError(why.str());
  }
  const int blocks = complete_blocks(r_max);
  if (blocks < 4) throw DomainError("insufficient data: fewer than 4 dyadic blocks");

  std::vector<double> sums(static_cast<std::size_t>(r_max));
  parallel_for(sums.size(), workers, [&](std::size_t i) {
    sums[i] = shell_sum(problem, static_cast<std::int64_t>(i) + 1);
  });

  SeriesReport report;
  for (std::int64_t r = 1; r <= r_max; ++r) {
    const double s = sums[static_cast<std::size_t>(r - 1)];
    report.shell_sums.emplace(r, s);
    report.partial_total += s;
    const int block = static_cast<int>(std::floor(std::log2(static_cast<double>(r))));
    report.dyadic_sums[block] += s;
  }

  const std::int64_t lo = std::int64_t{1} << (blocks - 2);
  const std::int64_t hi = (std::int64_t{1} << blocks) - 1;
  std::vector<double> x;
  std::vector<double> y;
  for (std::int64_t r = lo; r <= hi; ++r) {
    x.push_back(std::log(static_cast<double>(r)));
    y.push_back(std::log(sums[static_cast<std::size_t>(r - 1)]));
  }
  report.tail_exponent_fit = fit_slope(x, y);
  report.verdict = classify_exponent(report.tail_exponent_fit);
  return report;
}

double dyadic_spread(const SeriesReport& report) {
  double worst = 1.0;
  for (int l = 0;; ++l) {
    const std::int64_t lo = std::int64_t{1} << l;
    const std::int64_t hi = (std::int64_t{2} << l) - 1;
    if (!report.shell_sums.contains(hi)) break;
    double mn = std::numeric_limits<double>::infinity();
    double mx = 0.0;
    for (std::int64_t r = lo; r <= hi; ++r) {
      const double s = report.shell_sums.at(r);
      mn = std::min(mn, s);
      mx = std::max(mx, s);
    }
    worst = std::max(worst, mx / mn);
  }
  return worst;
}

std::optional<std::int64_t> lower_bound_onset(const Problem& problem, std::int64_t r_max) {
  for (std::int64_t r = 1; r <= r_max; ++r) {
    bool whole_shell = true;
    for_each_abs_pattern(problem.m(), r, [&](std::span<const std::int64_t> w, std::uint64_t) {
      if (!whole_shell) return;
      const IntegerVector u(std::vector<std::int64_t>(w.begin(), w.end()));
      whole_shell = gamma_u(problem, u).lower_bound_holds;
    });
    if (whole_shell) return r;
  }
  return std::nullopt;
}

namespace {

std::int64_t first_term(const ApproxFunction& psi) { return psi.rho() == 0.0 ? 1 : 2; }

}  // namespace

double khintchine_groshev_partial(const ApproxFunction& psi, int m, int n, std::int64_t Q) {
  if (Q < 1) throw DomainError("partial sum needs Q >= 1");
  if (m < 1 || n < 1) throw ValidationError("m and n must be >= 1");
  double total = 0.0;
  for (std::int64_t q = first_term(psi); q <= Q; ++q) {
    const double qd = static_cast<double>(q);
    total += std::pow(qd, n - 1) * std::pow(psi.formula(qd), m);
  }
  return total;
}

double jarnik_partial(const ApproxFunction& psi, const DimensionFunction& f, int m, int n,
                      std::int64_t Q) {
  if (Q < 1) throw DomainError("partial sum needs Q >= 1");
  if (m < 1 || n < 1) throw ValidationError("m and n must be >= 1");
  if (!f.strictly_above(m * (n - 1))) {
    std::ostringstream why;
    why << "m(n-1) ≺ f fails: f(r)/r^" << m * (n - 1) << " does not tend to 0";
    throw BracketError(why.str());
  }
  if (!f.below(m * n)) {
    std::ostringstream why;
    why << "f ⪯ mn fails: local exponent reaches " << f.exponent_high() << " > " << m * n;
    throw BracketError(why.str());
  }
  double total = 0.0;
  for (std::int64_t q = first_term(psi); q <= Q; ++q) {
    const double qd = static_cast<double>(q);
    const double x = psi.formula(qd) / qd;
    total += f(x) * std::pow(x, m * (1 - n)) * std::pow(qd, m + n - 1);
  }
  return total;
}

}  // namespace dnlab::series
