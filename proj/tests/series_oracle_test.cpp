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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hypercoeff/errors.hpp"
#include "hypercoeff/series_oracle.hpp"

namespace hypercoeff {
namespace {

Scalar X(std::string_view s) { return parse_scalar(s, Backend::kExact); }

std::vector<std::string> strings(const CoeffStream& s) {
  std::vector<std::string> out;
  for (const Scalar& v : s.coeffs) out.push_back(to_string(v));
  return out;
}

using V = std::vector<std::string>;

TEST(Kummer, ClosedForms) {
  // M(1,2;z) = (e^z - 1)/z
  EXPECT_EQ(strings(kummer_series(X("1"), X("2"), 4)),
            (V{"1", "1/2", "1/6", "1/24", "1/120"}));
  // M(a,a;z) = e^z
  EXPECT_EQ(strings(kummer_series(X("2/3+i"), X("2/3+i"), 3)),
            (V{"1", "1", "1/2", "1/6"}));
  EXPECT_THROW(kummer_series(X("1"), X("-2"), 3), ParameterDomainError);
  EXPECT_EQ(kummer_series(X("1"), X("3"), 0).size(), 1u);
}

TEST(Gauss, ClosedForms) {
  EXPECT_EQ(strings(gauss_series(X("1"), X("1"), X("1"), 3)),
            (V{"1", "1", "1", "1"}));
  // F(1/2,1/2;1;z): squared central binomials over 16^n
  EXPECT_EQ(strings(gauss_series(X("1/2"), X("1/2"), X("1"), 3)),
            (V{"1", "1/4", "9/64", "25/256"}));
  // terminates when a is a nonpositive integer
  EXPECT_EQ(strings(gauss_series(X("-2"), X("1"), X("1"), 4)),
            (V{"1", "-2", "1", "0", "0"}));
  EXPECT_THROW(gauss_series(X("1"), X("1"), X("0"), 3), ParameterDomainError);
}

TEST(Elementary, TrigAndHyperbolic) {
  const Scalar p = X("2");
  EXPECT_EQ(strings(elementary_series({HKind::kExp, p, {}}, 4)),
            (V{"1", "2", "2", "4/3", "2/3"}));
  EXPECT_EQ(strings(elementary_series({HKind::kSin, p, {}}, 5)),
            (V{"0", "2", "0", "-4/3", "0", "4/15"}));
  EXPECT_EQ(strings(elementary_series({HKind::kCos, p, {}}, 4)),
            (V{"1", "0", "-2", "0", "2/3"}));
  EXPECT_EQ(strings(elementary_series({HKind::kSinh, p, {}}, 3)),
            (V{"0", "2", "0", "4/3"}));
  EXPECT_EQ(strings(elementary_series({HKind::kCosh, p, {}}, 2)),
            (V{"1", "0", "2"}));
}

TEST(Elementary, InverseTrig) {
  // arcsin z = z + z^3/6 + 3z^5/40 + 5z^7/112
  EXPECT_EQ(strings(elementary_series({HKind::kArcsin, X("1"), {}}, 7)),
            (V{"0", "1", "0", "1/6", "0", "3/40", "0", "5/112"}));
  const CoeffStream acos = elementary_series({HKind::kArccos, X("1/2"), {}}, 3);
  EXPECT_EQ(strings(acos), (V{"0+(1/2)*pi", "-1/2", "0", "-1/48"}));
}

TEST(Elementary, BinomAndArctanExp) {
  EXPECT_EQ(strings(elementary_series({HKind::kBinom, X("3"), X("1/2")}, 4)),
            (V{"1", "-3/2", "3/4", "-1/8", "0"}));
  EXPECT_THROW(elementary_series({HKind::kBinom, X("3"), {}}, 4),
               ParameterDomainError);
  // exp(-p arctan z) = 1 - p z + p^2/2 z^2 + (p/3 - p^3/6) z^3 + ...
  EXPECT_EQ(strings(elementary_series({HKind::kExpArctan, X("1"), {}}, 4)),
            (V{"1", "-1", "1/2", "1/6", "-7/24"}));
}

TEST(CauchyProduct, InversePairs) {
  const CoeffStream a = elementary_series({HKind::kExp, X("3/7"), {}}, 12);
  const CoeffStream b = elementary_series({HKind::kExp, X("-3/7"), {}}, 12);
  const CoeffStream one = unit_stream(Backend::kExact, 12);
  EXPECT_EQ(cauchy_product(a, b).coeffs, one.coeffs);
  // (1 - z)^2 * F(1,1;1;z)... = (1 - z)
  const CoeffStream sq = elementary_series({HKind::kBinom, X("2"), X("1")}, 6);
  const CoeffStream geo = gauss_series(X("1"), X("1"), X("1"), 6);
  EXPECT_EQ(strings(cauchy_product(sq, geo)),
            (V{"1", "-1", "0", "0", "0", "0", "0"}));
  EXPECT_THROW(cauchy_product(a, geo), std::invalid_argument);
}

TEST(CauchyProduct, F64AgreesWithExact) {
  const CoeffStream ex = cauchy_product(
      elementary_series({HKind::kSin, X("3/2"), {}}, 20),
      kummer_series(X("1/3"), X("7/4"), 20));
  const CoeffStream fl = cauchy_product(
      elementary_series({HKind::kSin, to_f64(X("3/2")), {}}, 20),
      kummer_series(to_f64(X("1/3")), to_f64(X("7/4")), 20));
  ASSERT_EQ(fl.backend(), Backend::kF64);
  for (std::size_t n = 0; n < ex.size(); ++n) {
    const double y = approximate(ex[n]).abs();
    EXPECT_LE((approximate(ex[n]) - fl[n].f64()).abs(),
              1e-14 * std::max(1.0, y));
  }
  EXPECT_THROW(cauchy_product(ex, fl), BackendMismatchError);
}

}  // namespace
}  // namespace hypercoeff
