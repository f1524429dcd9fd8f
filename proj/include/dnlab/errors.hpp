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

#include <stdexcept>
#include <string>

namespace dnlab {

/// Base of every error raised by the library. The CLI maps subclasses to
/// exit codes, so new error kinds should derive from one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function (t below the floor, y out of
/// range, empty grid, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A dimension function does not sit in the required integer bracket, or a
/// comparability relation fails. The message names the failing relation.
class BracketError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The decay ratio psi(t)/psi(2t) cannot be bounded away from 1.
class CertificationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// gamma_u does not clear the lowest rung of the c~-scaled ladder, so no
/// k(u) exists. Happens for finitely many u; scans skip and count them.
class LowerBoundFailure : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed input: bad weights, inconsistent shapes, unreadable config.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its lattice-point budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// An engine-level property that must hold by construction was violated.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace dnlab
