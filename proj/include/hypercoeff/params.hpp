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

#ifndef HYPERCOEFF_PARAMS_HPP_
#define HYPERCOEFF_PARAMS_HPP_

#include <map>
#include <optional>
#include <string>

#include "hypercoeff/numerics.hpp"

namespace hypercoeff {

// The parameter tuple (a, b, c, p, theta).  Which entries are required
// depends on the family; see FamilyInfo::arity.
struct Params {
  std::optional<Scalar> a;
  std::optional<Scalar> b;
  std::optional<Scalar> c;
  std::optional<Scalar> p;
  std::optional<Scalar> theta;

  // Backend shared by all present entries (exact if none are present).
  // Throws BackendMismatchError when entries disagree.
  Backend backend() const;

  // Same values, every present entry converted with to_f64.
  Params to_f64() const;

  // Present entries keyed by name ("a", "b", "c", "p", "theta").
  std::map<std::string, Scalar> named() const;
};

// Convenience for tests and tools: parse each non-empty text with
// parse_scalar.
Params make_params(Backend backend, std::string_view a, std::string_view b,
                   std::string_view c, std::string_view p,
                   std::string_view theta = {});

// True when c is 0 or a negative integer.
bool is_nonpositive_integer(const Scalar& c);

}  // namespace hypercoeff

#endif  // HYPERCOEFF_PARAMS_HPP_
