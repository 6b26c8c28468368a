// Copyright 2026 The qcompare Authors
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

#ifndef QCOMPARE_ERRORS_HPP_
#define QCOMPARE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qcompare {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or tensor-factor dimensions do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The ensemble collapses to a single deterministic operation (d_out * env == 1),
/// so the averaged closed forms have vanishing denominators.
class DegenerateEnsembleError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A numerical routine did not meet its accuracy contract.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// The linear program has an empty feasible set.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcompare

#endif  // QCOMPARE_ERRORS_HPP_
