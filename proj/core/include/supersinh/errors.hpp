// Copyright 2026 The supersinh Authors
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

namespace supersinh {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An operand had the wrong (or indefinite) Grassmann parity for the
/// requested operation, e.g. an odd value where an even one is required.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// A supernumber with (numerically) vanishing body has no inverse.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation
/// (invalid window, modulus out of range, fractional power of a negative
/// base, evaluation outside a solution's grid, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Initial or boundary data violate an algebraic constraint of the reduced
/// system (for instance a fermionic bilinear constraint).
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// The requested subalgebra does not admit a superfield reduction of the
/// assumed form; carries a human-readable witness.
class NotReducibleError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent run configuration (ring sizes, grids, flags, files).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An iteration failed to converge or a computed quantity lost validity
/// (step size underflow, residual blow-up, root bracketing failure, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Evaluation was requested at an argument a pole of the function, or so
/// close to one that no accurate value can be produced.
class PoleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace supersinh
