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
#include <span>
#include <string_view>
#include <vector>

#include "dnlab/content.hpp"
#include "dnlab/integer_vector.hpp"
#include "dnlab/mc.hpp"
#include "dnlab/problem.hpp"
#include "dnlab/transference.hpp"

namespace dnlab::limsup {

/// A Problem together with the inhomogeneous shift b and the constants the
/// divergence construction derives from it.
struct DivergenceSetup {
  Problem problem;
  std::vector<double> b;
  double lambda = 0.0;
  transfer::TransferConstants constants;

  DivergenceSetup(Problem problem, std::vector<double> b);
  [[nodiscard]] int m() const { return problem.m(); }
  [[nodiscard]] int n() const { return problem.n(); }
  [[nodiscard]] double c_tilde() const { return constants.c_tilde; }
};

/// The unique k in [1, n] with
///   (c~ x_k)^k prod_{j>k} c~ x_j <= gamma_u < (c~ x_{k+1})^{k+1} prod_{j>k+1} c~ x_j,
/// x_j = t(u)^{-beta_j}/|u|. LowerBoundFailure when gamma_u is below the
/// k = 1 rung.
int k_of_u(const DivergenceSetup& setup, const IntegerVector& u);

/// (gamma_u prod_{j>k} |u| / (c~ t(u)^{-beta_j}))^{1/k}
double varpi_u(const DivergenceSetup& setup, const IntegerVector& u);

struct PhiProfile {
  IntegerVector u;
  bool active = false;
  /// Zero when inactive.
  int k = 0;
  double varpi = 0.0;
  std::vector<double> phi;
  double t_u = 0.0;
  double gamma = 0.0;
};

/// phi_j = c~ t(u)^{-beta_j} for j > k, |u| varpi for j <= k; all zero when
/// ||u . b|| <= eps(b).
PhiProfile phi_profile(const DivergenceSetup& setup, const IntegerVector& u);

struct PhiCheck {
  bool sandwich = true;  // c~ x_k <= varpi < c~ x_{k+1}
  bool chain = true;     // phi_1 = ... = phi_k < phi_{k+1} <= ... <= phi_n
  bool product = true;   // |prod phi / (gamma |u|^n) - 1| <= 1e-9
  double product_error = 0.0;
  [[nodiscard]] bool ok() const { return sandwich && chain && product; }
};

inline constexpr double kProductTolerance = 1e-9;

PhiCheck check_phi_profile(const DivergenceSetup& setup, const PhiProfile& profile);

/// |x . u - v| < bound
bool delta_membership(std::span<const double> x, const IntegerVector& u, std::int64_t v,
                      double bound);

/// A (row-major m x n, entries of [0,1]^{mn}) lies in R'(u, deltas): every
/// column has an integer v_j within deltas[j] of A_{*,j} . u with
/// gcd(u_1, ..., u_m, v_j) = 1. Each delta must be < 1/2.
bool rprime_membership(std::span<const double> a, int m, int n, const IntegerVector& u,
                       std::span<const double> deltas);
bool rprime_membership(const transfer::Matrix& A, const IntegerVector& u,
                       std::span<const double> deltas);

/// Exact L^1 measure of {x in [0,1] : |x u - v| < delta, gcd(u, v) = 1} for
/// scalar u != 0 and delta < 1/2, summing clipped disjoint intervals.
double rprime_measure_exact_1d(std::int64_t u, double delta);
/// Exact measure of the intersection of two such sets.
double rprime_intersection_exact_1d(std::int64_t u1, double delta1, std::int64_t u2, double delta2);

/// Gamma(r): the shell |u| = r restricted to ||u . b|| > eps(b), keeping the
/// lexicographically larger of each pair +-u.
std::vector<IntegerVector> gamma_set(std::int64_t r, std::span<const double> b);

/// Euler phi for 0..N by a linear sieve (entry 0 is 0).
std::vector<std::int64_t> totients(std::int64_t N);

/// Fraction of 1 <= u <= N with phi(u)/u >= 1/a.
double totient_density(double a, std::int64_t N);

struct ShellRow {
  std::int64_t r = 0;
  /// sum_{|u|=r} gamma_u r^n
  double shell_sum = 0.0;
  /// Same sum restricted to ||u . b|| > eps(b).
  double active_sum = 0.0;
  /// sum over Gamma(r) of prod_j phi_j (u with no valid k contribute 0).
  double gamma_set_sum = 0.0;
  bool totient_ok = false;
  bool member = false;
};

struct LambdaSelection {
  std::vector<std::int64_t> members;
  std::vector<ShellRow> rows;
  double a = 0.0;
  double density = 0.0;
  /// sum_{r in Lambda} sum_{Gamma(r)} prod phi_j
  double lambda_sum = 0.0;
  /// sum_{r <= r_max} shell_sum
  double full_sum = 0.0;
  double ratio = 0.0;
  /// l -> #(Lambda cap [2^l, 2^{l+1}))
  std::map<int, std::int64_t> block_counts;
  std::int64_t skipped_no_rung = 0;
};

inline constexpr double kActiveShare = 0.25;

/// Lambda = {r <= r_max : phi(r)/r >= 1/a and active_sum >= 0.25 shell_sum}.
/// `a` must give totient density above 1/2 on [1, r_max]; an empty Lambda is
/// a DomainError.
LambdaSelection lambda_selection(const DivergenceSetup& setup, std::int64_t r_max, double a,
                                 int workers = 0);

/// MC estimate of the measure of R'(u, deltas) inside [0,1]^{mn}.
mc::McEstimate rprime_measure_mc(const IntegerVector& u, std::span<const double> deltas, int n,
                                 std::uint64_t samples, std::uint64_t seed, int workers = 0);

enum class MeasureMethod { exact, monte_carlo };

std::string_view to_string(MeasureMethod method);

struct QiEntry {
  IntegerVector u1;
  IntegerVector u2;
  double measure1 = 0.0;
  double measure2 = 0.0;
  double intersection = 0.0;
  double ratio = 0.0;
  /// (phi(|u|)/|u|)^n prod phi <= measure <= 2^n prod phi for both marginals
  /// (with 3 stderr slack for MC).
  bool sandwich_ok = true;
};

struct QiReport {
  MeasureMethod method = MeasureMethod::exact;
  std::vector<QiEntry> entries;
  double max_ratio = 0.0;
  std::int64_t skipped_degenerate = 0;
  /// Pairs with some phi_j >= 1/2, outside the nearest-integer reduction.
  std::int64_t skipped_wide = 0;
  std::int64_t sandwich_violations = 0;
};

/// Measures R'(u, Phi(u)) for both members of each pair and their
/// intersection, exactly when m = 1 and by MC otherwise, and reports
/// intersection / (product of marginals). Pairs with a zero marginal are
/// skipped and counted.
QiReport quasi_independence_scan(const DivergenceSetup& setup,
                                 std::span<const std::pair<IntegerVector, IntegerVector>> pairs,
                                 std::uint64_t samples, std::uint64_t seed, int workers = 0);

/// `count` pairs drawn deterministically from the Gamma shells with
/// 1 <= r <= r_max, skipping u1 = +-u2, u without a valid k and u with some
/// phi_j >= 1/2.
std::vector<std::pair<IntegerVector, IntegerVector>> qi_pairs(const DivergenceSetup& setup,
                                                              std::int64_t r_max, int count,
                                                              std::uint64_t seed);

/// Sides c~ x_j (j <= k) each followed by m-1 copies of varpi, then m(n-k)
/// copies of varpi: mn sides in total. Requires an active profile.
content::Hyperrectangle inner_rectangle(const DivergenceSetup& setup, const IntegerVector& u);

/// rect_content_closed(f, inner_rectangle(u)) / varpi_u^{mn}
double content_ratio(const DivergenceSetup& setup, const IntegerVector& u);

struct ScanRow {
  std::int64_t r = 0;
  std::int64_t active = 0;
  std::int64_t inactive = 0;
  std::int64_t no_rung = 0;
  std::int64_t violations = 0;
  /// Over active u on the shell; nullopt when none.
  std::optional<double> min_content_ratio;
};

struct PhiScan {
  std::vector<ScanRow> rows;
  std::int64_t active = 0;
  std::int64_t inactive = 0;
  std::int64_t no_rung = 0;
  std::int64_t violations = 0;
  double worst_product_error = 0.0;
  std::optional<double> min_content_ratio;
  /// First offending u, if any.
  std::optional<IntegerVector> first_violation;
};

/// Checks every PhiProfile invariant and the content ratio for all u with
/// 1 <= |u| <= r_max.
PhiScan phi_scan(const DivergenceSetup& setup, std::int64_t r_max, int workers = 0);

}  // namespace dnlab::limsup
