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
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace dnlab {

/// A nonzero vector in Z^m together with its sup norm.
class IntegerVector {
 public:
  explicit IntegerVector(std::vector<std::int64_t> entries);
  IntegerVector(std::initializer_list<std::int64_t> entries);

  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] std::span<const std::int64_t> entries() const { return entries_; }
  [[nodiscard]] std::int64_t sup_norm() const { return sup_norm_; }

  [[nodiscard]] IntegerVector operator-() const;
  /// Adds `delta` to coordinate i. The result must stay nonzero.
  [[nodiscard]] IntegerVector shifted(std::size_t i, std::int64_t delta) const;
  /// True when the first nonzero coordinate is positive, i.e. u > -u in
  /// lexicographic order.
  [[nodiscard]] bool lex_positive() const;

  friend bool operator==(const IntegerVector&, const IntegerVector&) = default;
  friend auto operator<=>(const IntegerVector& a, const IntegerVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<std::int64_t> entries_;
  std::int64_t sup_norm_ = 0;
};

/// Number of points of Z^m with sup norm exactly r: (2r+1)^m - (2r-1)^m.
std::uint64_t shell_count(int m, std::int64_t r);

/// Visits every u in Z^m with |u| = r exactly once, in lexicographic order.
void for_each_in_shell(int m, std::int64_t r,
                       const std::function<void(const IntegerVector&)>& visit);

/// The whole shell as a vector, lexicographically ordered.
std::vector<IntegerVector> shell(int m, std::int64_t r);

/// Non-negative patterns w in {0..r}^m with max w_i = r, lexicographic,
/// paired with the number of sign choices 2^{#nonzero}. Summing the
/// multiplicities gives shell_count(m, r).
void for_each_abs_pattern(int m, std::int64_t r,
                          const std::function<void(std::span<const std::int64_t>,
                                                   std::uint64_t)>& visit);

}  // namespace dnlab
