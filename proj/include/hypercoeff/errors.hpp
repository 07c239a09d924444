// Copyright 2026 The hypercoeff Authors.
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

#ifndef HYPERCOEFF_ERRORS_HPP_
#define HYPERCOEFF_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypercoeff {

// Two families of failures, mirrored by the CLI exit codes: bad input
// (exit 2) and numeric breakdown during evaluation (exit 3).

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class BackendMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class BackendCapabilityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParameterDomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class CatalogueError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public NumericError {
 public:
  using NumericError::NumericError;
};

class NonFiniteError : public NumericError {
 public:
  using NumericError::NumericError;
};

// A recurrence row could not be evaluated at index n because one of its
// denominator factors vanished.
class SingularIndexError : public NumericError {
 public:
  SingularIndexError(std::int64_t n, std::string factor)
      : NumericError("singular recurrence row at n = " + std::to_string(n) +
                     ": factor (" + factor + ") vanishes"),
        n_(n),
        factor_(std::move(factor)) {}

  std::int64_t index() const { return n_; }
  const std::string& factor() const { return factor_; }

 private:
  std::int64_t n_;
  std::string factor_;
};

// Raised when a product would need pi^2.  This is a programming error, not a
// user error.
class PiSquaredError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hypercoeff

#endif  // HYPERCOEFF_ERRORS_HPP_
