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

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "dnlab/integer_vector.hpp"
#include "dnlab/problem.hpp"

namespace dnlab::series {

struct GammaTerm {
  IntegerVector u;
  double t_u = 0.0;
  bool clamped = false;
  double gamma = 0.0;
  /// 1-based j attaining the minimum (smallest on ties).
  int argmin_j = 1;
  /// gamma > prod_j t(u)^{-beta_j}/|u|.
  bool lower_bound_holds = false;
};

/// gamma_u(beta, f) = min_j f(x_j) x_j^{(1-m)n} prod_{l>=j} t^{beta_j - beta_l},
/// x_j = t(u)^{-beta_j}/|u|, evaluated in log space.
GammaTerm gamma_u(const Problem& problem, const IntegerVector& u);

struct LogGamma {
  double log_gamma = 0.0;
  int argmin_j = 1;
};

/// The same minimum from t(u) and |u| alone (gamma depends on nothing else).
LogGamma log_gamma_at(const Problem& problem, double t, double norm);

/// sum_{|u| = r} gamma_u r^n. Patterns of |u_i| are evaluated once and
/// weighted by their number of sign choices.
double shell_sum(const Problem& problem, std::int64_t r);

enum class Verdict { converges, diverges, undetermined };

std::string_view to_string(Verdict verdict);

struct SeriesReport {
  /// r -> sum_{|u|=r} gamma_u r^n for r = 1..r_max.
  std::map<std::int64_t, double> shell_sums;
  /// l -> sum of shell_sums over r in [2^l, 2^{l+1}) (last block may be partial).
  std::map<int, double> dyadic_sums;
  double partial_total = 0.0;
  /// Least-squares slope of ln shell_sum against ln r over the top two
  /// complete dyadic blocks.
  double tail_exponent_fit = 0.0;
  Verdict verdict = Verdict::undetermined;
};

inline constexpr double kVerdictMargin = 0.1;

/// Shell sums up to r_max (>= 256) and a heuristic verdict: converges when
/// the fitted tail exponent is below -1 - margin, diverges above -1 + margin.
SeriesReport series_verdict(const Problem& problem, std::int64_t r_max, int workers = 0);

/// Verdict from a fitted exponent alone.
Verdict classify_exponent(double exponent, double margin = kVerdictMargin);

/// Max over complete dyadic blocks of max/min shell_sum inside the block.
double dyadic_spread(const SeriesReport& report);

/// First r <= r_max such that gamma_u > prod_j t(u)^{-beta_j}/|u| holds for
/// every u on the shell of radius r.
std::optional<std::int64_t> lower_bound_onset(const Problem& problem, std::int64_t r_max);

/// sum_{q=1}^{Q} q^{n-1} psi(q)^m, using the family formula below t0. For
/// power_log psi the sum starts at q = 2 (ln 1 = 0).
double khintchine_groshev_partial(const ApproxFunction& psi, int m, int n, std::int64_t Q);

/// sum_q f(psi(q)/q) (psi(q)/q)^{m(1-n)} q^{m+n-1}, same q range as above.
/// Requires m(n-1) ≺ f ⪯ mn.
double jarnik_partial(const ApproxFunction& psi, const DimensionFunction& f, int m, int n,
                      std::int64_t Q);

}  // namespace dnlab::series
