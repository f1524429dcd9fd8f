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
#include <optional>
#include <span>
#include <vector>

#include "dnlab/approx_function.hpp"
#include "dnlab/integer_vector.hpp"
#include "dnlab/weights.hpp"

namespace dnlab::transfer {

/// Row-major m x n matrix.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
  [[nodiscard]] std::span<const double> values() const { return values_; }
  /// A_{*,j} . u
  [[nodiscard]] double column_dot(std::size_t j, const IntegerVector& u) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

/// x -> A q + b with weights on both sides.
struct AffineSystem {
  Matrix A;
  std::vector<double> b;
  WeightVector alpha;
  WeightVector beta;

  AffineSystem(Matrix A, std::vector<double> b, WeightVector alpha, WeightVector beta);
  [[nodiscard]] std::size_t m() const { return A.rows(); }
  [[nodiscard]] std::size_t n() const { return A.cols(); }
};

/// Distance to the nearest integer, in [0, 1/2].
double nearest_int_dist(double x);

/// ||u . b||_Z
double dual_distance(const IntegerVector& u, std::span<const double> b);

/// min over i with ||b_i|| > 0 of ||b_i||/4. DomainError when b is integral.
double epsilon_b(std::span<const double> b);

/// 1-based coordinate attaining epsilon_b.
int epsilon_index(std::span<const double> b);

/// Smallest integer tau with lambda^{-tau alpha_i} < d/(m+n) for all i, where
/// d is a given dual distance ||u . b||_Z > 0.
int tau_for_distance(double distance, double lambda, const WeightVector& alpha, int n);

/// tau(b, u) = tau_for_distance(||u . b||_Z, ...).
int tau_b_u(std::span<const double> b, const IntegerVector& u, double lambda,
            const WeightVector& alpha, int n);

/// Smallest integer tau with lambda^{tau alpha_i} >= ((m+n)!)^2 for all i.
int tau_const(double lambda, const WeightVector& alpha, int n);

struct TransferConstants {
  double eps_b = 0.0;
  /// Bound on tau(b, u) over ||u . b|| > eps_b: tau_for_distance(eps_b).
  int c_b = 0;
  int tau_const = 0;
  /// eps_b 2^{-c_b beta_1} / (m+n); beta_1 is the sup norm of beta.
  double c_tilde = 0.0;
};

TransferConstants transfer_constants(std::span<const double> b, double lambda,
                                     const WeightVector& alpha, const WeightVector& beta);

/// Upper bound on lattice points any enumeration here will visit.
inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

struct WitnessQuery {
  /// Per-coordinate bound on ||(A q + b)_i||: c^{alpha_i}.
  double c = 0.0;
  /// |q_j| bound t^{beta_j}.
  double t = 0.0;
  /// Strict (<) or non-strict (<=) inequality on the distance side.
  bool strict = true;
  /// Same for the size of q; follows `strict` when unset.
  std::optional<bool> strict_size;

  WitnessQuery(double c_, double t_, bool strict_ = true, std::optional<bool> strict_size_ = std::nullopt)
      : c(c_), t(t_), strict(strict_), strict_size(strict_size_) {}
};

/// First q != 0 (in the order below) with ||A q + b||_{Z,alpha} < c (or <=)
/// and |q|_beta < t (or <=). Coordinates are ordered 0, 1, -1, 2, -2, ...
/// and compared lexicographically, so small positive witnesses come first.
/// BudgetError when the box holds more than kEnumerationBudget points.
std::optional<std::vector<std::int64_t>> find_witness(const AffineSystem& sys,
                                                      const WitnessQuery& query);

struct DirichletResult {
  bool solvable = false;
  std::optional<std::vector<std::int64_t>> witness;
};

/// Is ||A q + b||_{Z,alpha} < psi(t), |q|_beta < t solvable with q != 0?
DirichletResult is_dirichlet_at_t(const AffineSystem& sys, const ApproxFunction& psi, double t);

/// ||A_{*,j} . u||_Z < c (t_scale t(u))^{-beta_j} for every j.
bool dual_condition(const AffineSystem& sys, const ApproxFunction& psi, const IntegerVector& u,
                    double c, double t_scale);

/// max{ max_j t^{beta_j} ||A_{*,j} . u||, max_i c^{alpha_i} |u_i| }
double transference_scale(const AffineSystem& sys, double c, double t, const IntegerVector& u);

/// Checks the forward transference inequality for a witness q with
/// ||A q + b||_{Z,alpha} <= c, |q|_beta <= t:
///   ||u . b||_Z <= (m+n) transference_scale(c, t, u).
/// Returns false only when the inequality is violated.
bool forward_transference_holds(const AffineSystem& sys, double c, double t,
                                const IntegerVector& u);

struct BackwardScan {
  /// Every u with 1 <= |u| <= range satisfied the backward hypothesis
  /// ||u . b|| <= 2^{m+n-1} ((m+n)!)^{-2} transference_scale. Only ever
  /// meaningful on this range.
  bool hypothesis_holds_on_range = true;
  std::int64_t range = 0;
  std::optional<IntegerVector> counterexample;
  /// When the hypothesis held on the range: whether a q with
  /// ||A q + b||_{Z,alpha} <= c, |q|_beta <= t exists.
  std::optional<bool> conclusion_found;
  /// Hypothesis held on the range but no such q exists: the finite range
  /// missed a refuting u, not a contradiction.
  bool range_artifact = false;
};

BackwardScan cassels_backward_scan(const AffineSystem& sys, double c, double t,
                                   std::int64_t u_range);

/// u itself when ||u . b|| > eps_b, otherwise u + e_i with i the epsilon_b
/// index. At most one of u, u + e_i is inactive, so the result is active.
IntegerVector shift_to_active(const IntegerVector& u, std::span<const double> b);

}  // namespace dnlab::transfer
