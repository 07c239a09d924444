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

// Ground-truth Maclaurin coefficients.
//
// Everything here is computed from the defining series and textbook
// expansions, followed by an O(N^2) Cauchy product.  Nothing in this module
// uses the product recurrences, so it can judge them.
//
// The one non-textbook stream is exp_arctan: f(z) = exp(-p arctan z)
// satisfies (1 + z^2) f'(z) = -p f(z).  Comparing coefficients of z^n gives
//   (n+1) f_{n+1} + (n-1) f_{n-1} = -p f_n,   f_0 = 1, f_1 = -p,
// a two-term recurrence that is unrelated to the five-term product
// recurrences it is used to check.

#ifndef HYPERCOEFF_SERIES_ORACLE_HPP_
#define HYPERCOEFF_SERIES_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hypercoeff/numerics.hpp"
#include "hypercoeff/params.hpp"

namespace hypercoeff {

// The elementary factor h(z).
enum class HKind {
  kExp,
  kSin,
  kCos,
  kSinh,
  kCosh,
  kArcsin,
  kArccos,
  kBinom,      // (1 - theta z)^p
  kExpArctan,  // exp(-p arctan z)
};

std::string_view to_string(HKind kind);
HKind parse_hkind(std::string_view text);

struct ElementaryKind {
  HKind kind;
  Scalar p;
  std::optional<Scalar> theta;  // binom only
};

enum class SeriesBase { kM, kF, kK, kE, kElementary, kProduct };
enum class Provenance { kOracle, kRecurrence };

std::string_view to_string(SeriesBase base);
std::string_view to_string(Provenance provenance);

// A finite prefix u_0..u_N of a Maclaurin coefficient sequence.
struct CoeffStream {
  std::vector<Scalar> coeffs;
  SeriesBase base = SeriesBase::kProduct;
  Provenance provenance = Provenance::kOracle;
  Params params;

  std::size_t size() const { return coeffs.size(); }
  const Scalar& operator[](std::size_t n) const { return coeffs[n]; }
  Backend backend() const;
};

// (a)_n / ((c)_n n!), n = 0..N.
CoeffStream kummer_series(const Scalar& a, const Scalar& c, std::int64_t N);

// (a)_n (b)_n / ((c)_n n!), n = 0..N.
CoeffStream gauss_series(const Scalar& a, const Scalar& b, const Scalar& c,
                         std::int64_t N);

// Coefficients of h(z), n = 0..N.  arccos needs pi, which the exact
// backend carries as PiLinear.
CoeffStream elementary_series(const ElementaryKind& h, std::int64_t N);

// Entry n = sum_{k<=n} A_k B_{n-k}.  Both inputs must share length and
// backend.
CoeffStream cauchy_product(const CoeffStream& A, const CoeffStream& B);

// (1, 0, ..., 0) of length N+1.
CoeffStream unit_stream(Backend backend, std::int64_t N);

// Entry-wise s * A.
CoeffStream scale(const CoeffStream& A, const Scalar& s);

}  // namespace hypercoeff

#endif  // HYPERCOEFF_SERIES_ORACLE_HPP_
