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

#include "dnlab/integer_vector.hpp"

#include <algorithm>
#include <cstdlib>

#include "dnlab/errors.hpp"

namespace dnlab {

IntegerVector::IntegerVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("integer vector must have at least one entry");
  for (auto e : entries_) sup_norm_ = std::max<std::int64_t>(sup_norm_, std::llabs(e));
  if (sup_norm_ == 0) throw ValidationError("integer vector must be nonzero");
}

IntegerVector::IntegerVector(std::initializer_list<std::int64_t> entries)
    : IntegerVector(std::vector<std::int64_t>(entries)) {}

IntegerVector IntegerVector::operator-() const {
  auto negated = entries_;
  for (auto& e : negated) e = -e;
  return IntegerVector(std::move(negated));
}

IntegerVector IntegerVector::shifted(std::size_t i, std::int64_t delta) const {
  auto moved = entries_;
  moved.at(i) += delta;
  return IntegerVector(std::move(moved));
}

bool IntegerVector::lex_positive() const {
  for (auto e : entries_) {
    if (e != 0) return e > 0;
  }
  return false;
}

std::uint64_t shell_count(int m, std::int64_t r) {
  if (m < 1 || r < 1) throw DomainError("shell_count needs m >= 1 and r >= 1");
  std::uint64_t outer = 1;
  std::uint64_t inner = 1;
  for (int i = 0; i < m; ++i) {
    outer *= static_cast<std::uint64_t>(2 * r + 1);
    inner *= static_cast<std::uint64_t>(2 * r - 1);
  }
  return outer - inner;
}

void for_each_in_shell(int m, std::int64_t r,
                       const std::function<void(const IntegerVector&)>& visit) {
  if (m < 1 || r < 1) throw DomainError("shell enumeration needs m >= 1 and r >= 1");
  std::vector<std::int64_t> u(static_cast<std::size_t>(m), -r);
  while (true) {
    // Odometer over the box [-r, r]^m; the last coordinate runs fastest.
    bool on_shell = false;
    for (auto e : u) on_shell = on_shell || std::llabs(e) == r;
    if (on_shell) {
      visit(IntegerVector(u));
    } else {
      // Interior run: jump the last coordinate straight to +r.
      u.back() = r;
      continue;
    }
    int i = m - 1;
    while (i >= 0 && u[static_cast<std::size_t>(i)] == r) {
      u[static_cast<std::size_t>(i)] = -r;
      --i;
    }
    if (i < 0) break;
    ++u[static_cast<std::size_t>(i)];
  }
}

std::vector<IntegerVector> shell(int m, std::int64_t r) {
  std::vector<IntegerVector> out;
  out.reserve(shell_count(m, r));
  for_each_in_shell(m, r, [&](const IntegerVector& u) { out.push_back(u); });
  return out;
}

void for_each_abs_pattern(int m, std::int64_t r,
                          const std::function<void(std::span<const std::int64_t>,
                                                   std::uint64_t)>& visit) {
  if (m < 1 || r < 1) throw DomainError("shell enumeration needs m >= 1 and r >= 1");
  std::vector<std::int64_t> w(static_cast<std::size_t>(m), 0);
  while (true) {
    std::int64_t top = 0;
    int nonzero = 0;
    for (auto e : w) {
      top = std::max(top, e);
      nonzero += e != 0 ? 1 : 0;
    }
    if (top != r) {
      w.back() = r;
      continue;
    }
    visit(w, std::uint64_t{1} << nonzero);
    int i = m - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == r) {
      w[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
}

}  // namespace dnlab
