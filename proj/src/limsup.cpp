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

#include "dnlab/limsup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "dnlab/errors.hpp"
#include "dnlab/parallel.hpp"
#include "dnlab/series.hpp"

namespace dnlab::limsup {

DivergenceSetup::DivergenceSetup(Problem problem_, std::vector<double> b_)
    : problem(std::move(problem_)), b(std::move(b_)) {
  if (static_cast<int>(b.size()) != problem.m()) throw ValidationError("b must have m entries");
  lambda = validate_lambda_decay(problem.psi());
  constants = transfer::transfer_constants(b, lambda, problem.alpha(), problem.beta());
}

namespace {

// ln of the rung sides c~ t^{-beta_j} / |u| and ln gamma_u.
struct Ladder {
  double t = 0.0;
  double norm = 0.0;
  double log_gamma = 0.0;
  std::vector<double> log_side;
};

Ladder make_ladder(const DivergenceSetup& setup, const IntegerVector& u) {
  Ladder l;
  l.t = t_of_u(setup.problem.psi(), setup.problem.alpha(), u).t;
  l.norm = static_cast<double>(u.sup_norm());
  l.log_gamma = series::log_gamma_at(setup.problem, l.t, l.norm).log_gamma;
  const double log_c = std::log(setup.c_tilde());
  for (double bj : setup.problem.beta().values())
    l.log_side.push_back(log_c - bj * std::log(l.t) - std::log(l.norm));
  return l;
}

// ln of (c~ x_k)^k prod_{j>k} c~ x_j, k 1-based.
double log_rung(const Ladder& l, int k) {
  double value = k * l.log_side[static_cast<std::size_t>(k - 1)];
  for (std::size_t j = static_cast<std::size_t>(k); j < l.log_side.size(); ++j) value += l.log_side[j];
  return value;
}

int rung_of(const Ladder& l, const IntegerVector& u) {
  const int n = static_cast<int>(l.log_side.size());
  if (l.log_gamma < log_rung(l, 1)) {
    std::ostringstream why;
    why << "no valid k(u) at |u| = " << u.sup_norm() << ": gamma_u below the lowest rung";
    throw LowerBoundFailure(why.str());
  }
  for (int k = 1; k < n; ++k) {
    if (l.log_gamma < log_rung(l, k + 1)) return k;
  }
  return n;
}

double varpi_of(const Ladder& l, int k) {
  double log_rest = 0.0;
  for (std::size_t j = static_cast<std::size_t>(k); j < l.log_side.size(); ++j) log_rest += l.log_side[j];
  return std::exp((l.log_gamma - log_rest) / k);
}

}  // namespace

int k_of_u(const DivergenceSetup& setup, const IntegerVector& u) {
  return rung_of(make_ladder(setup, u), u);
}

double varpi_u(const DivergenceSetup& setup, const IntegerVector& u) {
  const Ladder l = make_ladder(setup, u);
  return varpi_of(l, rung_of(l, u));
}

PhiProfile phi_profile(const DivergenceSetup& setup, const IntegerVector& u) {
  const int n = setup.n();
  PhiProfile p{u, false, 0, 0.0, std::vector<double>(static_cast<std::size_t>(n), 0.0), 0.0, 0.0};
  if (transfer::dual_distance(u, setup.b) <= setup.constants.eps_b) {
    p.t_u = t_of_u(setup.problem.psi(), setup.problem.alpha(), u).t;
    p.gamma = std::exp(series::log_gamma_at(setup.problem, p.t_u, u.sup_norm()).log_gamma);
    return p;
  }
  const Ladder l = make_ladder(setup, u);
  p.active = true;
  p.t_u = l.t;
  p.gamma = std::exp(l.log_gamma);
  p.k = rung_of(l, u);
  p.varpi = varpi_of(l, p.k);
  for (int j = 0; j < n; ++j) {
    p.phi[static_cast<std::size_t>(j)] =
        j < p.k ? l.norm * p.varpi
                : setup.c_tilde() * std::pow(l.t, -setup.problem.beta()[static_cast<std::size_t>(j)]);
  }
  return p;
}

PhiCheck check_phi_profile(const DivergenceSetup& setup, const PhiProfile& p) {
  PhiCheck check;
  if (!p.active) {
    check.chain = std::all_of(p.phi.begin(), p.phi.end(), [](double v) { return v == 0.0; });
    return check;
  }
  constexpr double kSlack = 1e-12;
  const int n = setup.n();
  const double norm = static_cast<double>(p.u.sup_norm());
  auto rung_side = [&](int j) {
    return setup.c_tilde() * std::pow(p.t_u, -setup.problem.beta()[static_cast<std::size_t>(j - 1)]) / norm;
  };
  check.sandwich = p.varpi >= rung_side(p.k) * (1.0 - kSlack) &&
                   (p.k == n || p.varpi < rung_side(p.k + 1) * (1.0 + kSlack));
  for (int j = 1; j < p.k; ++j) check.chain = check.chain && p.phi[static_cast<std::size_t>(j)] == p.phi[0];
  if (p.k < n) {
    check.chain = check.chain && p.phi[static_cast<std::size_t>(p.k - 1)] <
                                     p.phi[static_cast<std::size_t>(p.k)] * (1.0 + kSlack);
  }
  for (int j = p.k; j + 1 < n; ++j) {
    check.chain = check.chain && p.phi[static_cast<std::size_t>(j)] <= p.phi[static_cast<std::size_t>(j + 1)];
  }
  double product = 1.0;
  for (double v : p.phi) product *= v;
  check.product_error = std::abs(product / (p.gamma * std::pow(norm, n)) - 1.0);
  check.product = check.product_error <= kProductTolerance;
  return check;
}

bool delta_membership(std::span<const double> x, const IntegerVector& u, std::int64_t v,
                      double bound) {
  if (!(bound > 0.0)) throw DomainError("delta_membership needs a positive bound");
  if (x.size() != u.size()) throw ValidationError("x and u differ in length");
  double dot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * static_cast<double>(u[i]);
  return std::abs(dot - static_cast<double>(v)) < bound;
}

namespace {

std::int64_t content_gcd(const IntegerVector& u) {
  std::int64_t g = 0;
  for (auto e : u.entries()) g = std::gcd(g, std::llabs(e));
  return g;
}

void require_small(std::span<const double> deltas) {
  for (double d : deltas) {
    if (!(d >= 0.0)) throw DomainError("R' radii must be non-negative");
    if (d >= 0.5) throw DomainError("R' radii must be < 1/2 for the nearest-integer reduction");
  }
}

}  // namespace

bool rprime_membership(std::span<const double> a, int m, int n, const IntegerVector& u,
                       std::span<const double> deltas) {
  if (a.size() != static_cast<std::size_t>(m * n)) throw ValidationError("A must have m*n entries");
  if (u.size() != static_cast<std::size_t>(m)) throw ValidationError("u must have m entries");
  if (deltas.size() != static_cast<std::size_t>(n)) throw ValidationError("need n radii");
  require_small(deltas);
  const std::int64_t g = content_gcd(u);
  for (int j = 0; j < n; ++j) {
    double y = 0.0;
    for (int i = 0; i < m; ++i) y += a[static_cast<std::size_t>(i * n + j)] * static_cast<double>(u[static_cast<std::size_t>(i)]);
    const double v = std::nearbyint(y);
    if (!(std::abs(y - v) < deltas[static_cast<std::size_t>(j)])) return false;
    if (std::gcd(g, std::llabs(static_cast<std::int64_t>(v))) != 1) return false;
  }
  return true;
}

bool rprime_membership(const transfer::Matrix& A, const IntegerVector& u,
                       std::span<const double> deltas) {
  return rprime_membership(A.values(), static_cast<int>(A.rows()), static_cast<int>(A.cols()), u,
                           deltas);
}

namespace {

using Interval = std::pair<double, double>;

std::vector<Interval> rprime_intervals_1d(std::int64_t u, double delta) {
  if (u == 0) throw DomainError("R' needs u != 0");
  const double d[] = {delta};
  require_small(d);
  const std::int64_t a = std::llabs(u);
  const double ad = static_cast<double>(a);
  std::vector<Interval> out;
  for (std::int64_t v = 0; v <= a; ++v) {
    if (std::gcd(a, v) != 1) continue;
    const double lo = std::max(0.0, (static_cast<double>(v) - delta) / ad);
    const double hi = std::min(1.0, (static_cast<double>(v) + delta) / ad);
    if (hi > lo) out.emplace_back(lo, hi);
  }
  return out;
}

}  // namespace

double rprime_measure_exact_1d(std::int64_t u, double delta) {
  double total = 0.0;
  for (const auto& [lo, hi] : rprime_intervals_1d(u, delta)) total += hi - lo;
  return total;
}

double rprime_intersection_exact_1d(std::int64_t u1, double delta1, std::int64_t u2,
                                    double delta2) {
  const auto first = rprime_intervals_1d(u1, delta1);
  const auto second = rprime_intervals_1d(u2, delta2);
  double total = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < first.size() && j < second.size()) {
    const double lo = std::max(first[i].first, second[j].first);
    const double hi = std::min(first[i].second, second[j].second);
    if (hi > lo) total += hi - lo;
    (first[i].second < second[j].second ? i : j)++;
  }
  return total;
}

std::vector<IntegerVector> gamma_set(std::int64_t r, std::span<const double> b) {
  const double eps = transfer::epsilon_b(b);
  std::vector<IntegerVector> out;
  for_each_in_shell(static_cast<int>(b.size()), r, [&](const IntegerVector& u) {
    if (u.lex_positive() && transfer::dual_distance(u, b) > eps) out.push_back(u);
  });
  return out;
}

std::vector<std::int64_t> totients(std::int64_t N) {
  if (N < 1) throw DomainError("totient sieve needs N >= 1");
  std::vector<std::int64_t> phi(static_cast<std::size_t>(N + 1), 0);
  std::vector<std::int64_t> primes;
  if (N >= 1) phi[1] = 1;
  for (std::int64_t i = 2; i <= N; ++i) {
    if (phi[static_cast<std::size_t>(i)] == 0) {
      phi[static_cast<std::size_t>(i)] = i - 1;
      primes.push_back(i);
    }
    for (auto p : primes) {
      if (i * p > N) break;
      if (i % p == 0) {
        phi[static_cast<std::size_t>(i * p)] = phi[static_cast<std::size_t>(i)] * p;
        break;
      }
      phi[static_cast<std::size_t>(i * p)] = phi[static_cast<std::size_t>(i)] * (p - 1);
    }
  }
  return phi;
}

double totient_density(double a, std::int64_t N) {
  if (!(a > 0.0)) throw DomainError("totient_density needs a > 0");
  const auto phi = totients(N);
  std::int64_t count = 0;
  for (std::int64_t u = 1; u <= N; ++u) {
    if (a * static_cast<double>(phi[static_cast<std::size_t>(u)]) >= static_cast<double>(u)) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(N);
}

LambdaSelection lambda_selection(const DivergenceSetup& setup, std::int64_t r_max, double a,
                                 int workers) {
  if (r_max < 1) throw DomainError("lambda_selection needs r_max >= 1");
  const auto phi = totients(r_max);
  LambdaSelection sel;
  sel.a = a;
  const double density = totient_density(a, r_max);
  if (!(density > 0.5)) {
    std::ostringstream why;
    why << "totient threshold a = " << a << " gives density " << density << " <= 1/2";
    throw DomainError(why.str());
  }

  sel.rows.resize(static_cast<std::size_t>(r_max));
  std::vector<std::int64_t> no_rung(static_cast<std::size_t>(r_max), 0);
  const int n = setup.n();
  parallel_for(sel.rows.size(), workers, [&](std::size_t idx) {
    const std::int64_t r = static_cast<std::int64_t>(idx) + 1;
    ShellRow row;
    row.r = r;
    for_each_in_shell(setup.m(), r, [&](const IntegerVector& u) {
      const double g = series::gamma_u(setup.problem, u).gamma;
      row.shell_sum += g;
      if (transfer::dual_distance(u, setup.b) <= setup.constants.eps_b) return;
      row.active_sum += g;
      if (!u.lex_positive()) return;
      try {
        const PhiProfile p = phi_profile(setup, u);
        double product = 1.0;
        for (double v : p.phi) product *= v;
        row.gamma_set_sum += product;
      } catch (const LowerBoundFailure&) {
        ++no_rung[idx];
      }
    });
    const double scale = std::pow(static_cast<double>(r), n);
    row.shell_sum *= scale;
    row.active_sum *= scale;
    row.totient_ok = a * static_cast<double>(phi[static_cast<std::size_t>(r)]) >= static_cast<double>(r);
    row.member = row.totient_ok && row.active_sum >= kActiveShare * row.shell_sum;
    sel.rows[idx] = row;
  });

  for (const auto& row : sel.rows) {
    sel.full_sum += row.shell_sum;
    if (!row.member) continue;
    sel.members.push_back(row.r);
    sel.lambda_sum += row.gamma_set_sum;
    ++sel.block_counts[static_cast<int>(std::floor(std::log2(static_cast<double>(row.r))))];
  }
  for (auto c : no_rung) sel.skipped_no_rung += c;
  if (sel.members.empty()) throw DomainError("construction failure: Lambda is empty up to r_max");
  sel.density = static_cast<double>(sel.members.size()) / static_cast<double>(r_max);
  sel.ratio = sel.lambda_sum / sel.full_sum;
  return sel;
}

mc::McEstimate rprime_measure_mc(const IntegerVector& u, std::span<const double> deltas, int n,
                                 std::uint64_t samples, std::uint64_t seed, int workers) {
  const int m = static_cast<int>(u.size());
  std::vector<double> radii(deltas.begin(), deltas.end());
  require_small(radii);
  return mc::mc_measure(
      [&](std::span<const double> x) { return rprime_membership(x, m, n, u, radii); }, m * n,
      samples, seed, workers);
}

std::string_view to_string(MeasureMethod method) {
  return method == MeasureMethod::exact ? "exact" : "monte_carlo";
}

namespace {

bool sandwich_holds(double measure, double slack, const PhiProfile& p, std::int64_t totient, int n) {
  double product = 1.0;
  for (double v : p.phi) product *= v;
  const double norm = static_cast<double>(p.u.sup_norm());
  const double lower = std::pow(static_cast<double>(totient) / norm, n) * product;
  const double upper = std::exp2(n) * product;
  return measure + slack >= lower * (1.0 - 1e-12) && measure - slack <= upper * (1.0 + 1e-12);
}

}  // namespace

QiReport quasi_independence_scan(const DivergenceSetup& setup,
                                 std::span<const std::pair<IntegerVector, IntegerVector>> pairs,
                                 std::uint64_t samples, std::uint64_t seed, int workers) {
  const int m = setup.m();
  const int n = setup.n();
  QiReport report;
  report.method = m == 1 ? MeasureMethod::exact : MeasureMethod::monte_carlo;
  std::int64_t top = 1;
  for (const auto& [u1, u2] : pairs) top = std::max({top, u1.sup_norm(), u2.sup_norm()});
  const auto phi = totients(top);

  for (const auto& [u1, u2] : pairs) {
    if (u1 == u2 || u1 == -u2) throw ValidationError("quasi-independence pairs need u1 != +-u2");
    const PhiProfile p1 = phi_profile(setup, u1);
    const PhiProfile p2 = phi_profile(setup, u2);
    if (!p1.active || !p2.active) {
      ++report.skipped_degenerate;
      continue;
    }
    auto wide = [](const PhiProfile& p) {
      return std::any_of(p.phi.begin(), p.phi.end(), [](double v) { return v >= 0.5; });
    };
    if (wide(p1) || wide(p2)) {
      ++report.skipped_wide;
      continue;
    }
    QiEntry e{u1, u2};
    double slack1 = 0.0;
    double slack2 = 0.0;
    if (report.method == MeasureMethod::exact) {
      e.measure1 = 1.0;
      e.measure2 = 1.0;
      e.intersection = 1.0;
      for (int j = 0; j < n; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        e.measure1 *= rprime_measure_exact_1d(u1[0], p1.phi[jj]);
        e.measure2 *= rprime_measure_exact_1d(u2[0], p2.phi[jj]);
        e.intersection *= rprime_intersection_exact_1d(u1[0], p1.phi[jj], u2[0], p2.phi[jj]);
      }
    } else {
      const auto est1 = rprime_measure_mc(u1, p1.phi, n, samples, seed, workers);
      const auto est2 = rprime_measure_mc(u2, p2.phi, n, samples, seed, workers);
      const auto both = mc::mc_measure(
          [&](std::span<const double> x) {
            return rprime_membership(x, m, n, u1, p1.phi) && rprime_membership(x, m, n, u2, p2.phi);
          },
          m * n, samples, seed, workers);
      e.measure1 = est1.mean;
      e.measure2 = est2.mean;
      e.intersection = both.mean;
      slack1 = 3.0 * est1.std_error;
      slack2 = 3.0 * est2.std_error;
    }
    if (e.measure1 == 0.0 || e.measure2 == 0.0) {
      ++report.skipped_degenerate;
      continue;
    }
    e.ratio = e.intersection / (e.measure1 * e.measure2);
    e.sandwich_ok = sandwich_holds(e.measure1, slack1, p1, phi[static_cast<std::size_t>(u1.sup_norm())], n) &&
                    sandwich_holds(e.measure2, slack2, p2, phi[static_cast<std::size_t>(u2.sup_norm())], n);
    if (!e.sandwich_ok) ++report.sandwich_violations;
    report.max_ratio = std::max(report.max_ratio, e.ratio);
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::vector<std::pair<IntegerVector, IntegerVector>> qi_pairs(const DivergenceSetup& setup,
                                                              std::int64_t r_max, int count,
                                                              std::uint64_t seed) {
  std::vector<IntegerVector> pool;
  for (std::int64_t r = 1; r <= r_max; ++r) {
    for (auto& u : gamma_set(r, setup.b)) {
      try {
        const auto p = phi_profile(setup, u);
        if (std::all_of(p.phi.begin(), p.phi.end(), [](double v) { return v < 0.5; }))
          pool.push_back(std::move(u));
      } catch (const LowerBoundFailure&) {
      }
    }
  }
  std::vector<std::pair<IntegerVector, IntegerVector>> pairs;
  if (pool.size() < 2) return pairs;
  const std::uint64_t size = pool.size();
  for (std::uint64_t draw = 0; static_cast<int>(pairs.size()) < count && draw < 64ULL * static_cast<std::uint64_t>(count) + 64; ++draw) {
    const auto i = static_cast<std::size_t>(mc::mix64(seed ^ mc::mix64(2 * draw)) % size);
    const auto j = static_cast<std::size_t>(mc::mix64(seed ^ mc::mix64(2 * draw + 1)) % size);
    // Gamma sets hold no antipodal pairs, so i != j suffices.
    if (i != j) pairs.emplace_back(pool[i], pool[j]);
  }
  return pairs;
}

content::Hyperrectangle inner_rectangle(const DivergenceSetup& setup, const IntegerVector& u) {
  const PhiProfile p = phi_profile(setup, u);
  if (!p.active) throw DomainError("inner_rectangle needs an active u (||u . b|| > eps(b))");
  const int m = setup.m();
  const int n = setup.n();
  const double norm = static_cast<double>(u.sup_norm());
  std::vector<double> sides;
  sides.reserve(static_cast<std::size_t>(m * n));
  for (int j = 0; j < p.k; ++j) {
    sides.push_back(setup.c_tilde() * std::pow(p.t_u, -setup.problem.beta()[static_cast<std::size_t>(j)]) / norm);
    sides.insert(sides.end(), static_cast<std::size_t>(m - 1), p.varpi);
  }
  sides.insert(sides.end(), static_cast<std::size_t>(m * (n - p.k)), p.varpi);
  return content::Hyperrectangle(std::move(sides));
}

double content_ratio(const DivergenceSetup& setup, const IntegerVector& u) {
  const auto rect = inner_rectangle(setup, u);
  const double varpi = varpi_u(setup, u);
  return content::rect_content_closed(setup.problem.f(), rect).value /
         std::pow(varpi, setup.m() * setup.n());
}

PhiScan phi_scan(const DivergenceSetup& setup, std::int64_t r_max, int workers) {
  if (r_max < 1) throw DomainError("phi_scan needs r_max >= 1");
  PhiScan scan;
  scan.rows.resize(static_cast<std::size_t>(r_max));
  std::vector<double> worst(static_cast<std::size_t>(r_max), 0.0);
  std::vector<std::optional<IntegerVector>> offender(static_cast<std::size_t>(r_max));
  parallel_for(scan.rows.size(), workers, [&](std::size_t idx) {
    ScanRow row;
    row.r = static_cast<std::int64_t>(idx) + 1;
    for_each_in_shell(setup.m(), row.r, [&](const IntegerVector& u) {
      std::optional<PhiProfile> found;
      try {
        found = phi_profile(setup, u);
      } catch (const LowerBoundFailure&) {
        ++row.no_rung;
        return;
      }
      const PhiProfile& p = *found;
      const PhiCheck check = check_phi_profile(setup, p);
      worst[idx] = std::max(worst[idx], check.product_error);
      if (!check.ok()) {
        ++row.violations;
        if (!offender[idx]) offender[idx] = u;
      }
      if (!p.active) {
        ++row.inactive;
        return;
      }
      ++row.active;
      const double ratio = content_ratio(setup, u);
      row.min_content_ratio = std::min(row.min_content_ratio.value_or(ratio), ratio);
    });
    scan.rows[idx] = row;
  });
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    const auto& row = scan.rows[i];
    scan.active += row.active;
    scan.inactive += row.inactive;
    scan.no_rung += row.no_rung;
    scan.violations += row.violations;
    scan.worst_product_error = std::max(scan.worst_product_error, worst[i]);
    if (row.min_content_ratio)
      scan.min_content_ratio = std::min(scan.min_content_ratio.value_or(*row.min_content_ratio), *row.min_content_ratio);
    if (!scan.first_violation && offender[i]) scan.first_violation = offender[i];
  }
  return scan;
}

}  // namespace dnlab::limsup
