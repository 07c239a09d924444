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
#include "hypercoeff/numerics.hpp"
#include "hypercoeff/params.hpp"

namespace hypercoeff {
namespace {

Scalar X(std::string_view s) { return parse_scalar(s, Backend::kExact); }
Scalar F(std::string_view s) { return parse_scalar(s, Backend::kF64); }

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 7).to_string(), "0");
  EXPECT_EQ(Rational(12, 4).to_string(), "3");
  EXPECT_EQ((Rational(1, 6) + Rational(1, 3)).to_string(), "1/2");
  EXPECT_THROW(Rational(1, 0), DivisionByZeroError);
}

TEST(Rational, NearestDouble) {
  EXPECT_EQ(Rational(1, 3).to_double(), 1.0 / 3.0);
  EXPECT_EQ(Rational(-7, 8).to_double(), -0.875);
}

TEST(GaussianRational, FieldOperations) {
  const Scalar z = X("1/2+3i");
  const Scalar w = X("-2-1/3i");
  EXPECT_EQ(z * w / w, z);
  EXPECT_EQ(to_string(z * w), "-37/6i");
  EXPECT_EQ(to_string(X("i") * X("i")), "-1");
  EXPECT_THROW(z / X("0"), DivisionByZeroError);
}

TEST(ParseScalar, Grammar) {
  EXPECT_EQ(to_string(X("-12")), "-12");
  EXPECT_EQ(to_string(X("4/6")), "2/3");
  EXPECT_EQ(to_string(X("3/4-1/2i")), "3/4-1/2i");
  EXPECT_EQ(to_string(X("-i")), "-1i");
  EXPECT_EQ(to_string(X("5i")), "5i");
  EXPECT_THROW(X("0.5"), BackendMismatchError);
  EXPECT_THROW(X("1/0"), ParseError);
  EXPECT_THROW(X("abc"), ParseError);
  EXPECT_THROW(X(""), ParseError);
  EXPECT_EQ(F("0.25").f64(), Complex64(0.25));
  EXPECT_EQ(F("1/4-2i").f64(), Complex64(0.25, -2.0));
}

TEST(ParseScalar, RoundTripsThroughToString) {
  for (const char* s : {"0", "7", "-3/5", "2/3+5/7i", "-1/9i", "i"}) {
    const Scalar v = X(s);
    EXPECT_EQ(X(to_string(v)), v) << s;
  }
  for (const char* s : {"0.1", "-2.5e-7", "3+0.25i", "1e300"}) {
    const Scalar v = F(s);
    EXPECT_EQ(F(to_string(v)), v) << s;
  }
}

TEST(PiLinear, PromotionAndDemotion) {
  const Scalar half_pi = Scalar::pi_times(X("1/2"));
  EXPECT_TRUE(half_pi.is_pi_linear());
  EXPECT_EQ(to_string(half_pi), "0+(1/2)*pi");
  const Scalar v = half_pi * X("3") + X("1");
  EXPECT_EQ(to_string(v), "1+(3/2)*pi");
  EXPECT_TRUE((v - half_pi * X("3")).is_gaussian());
  EXPECT_THROW(half_pi * half_pi, PiSquaredError);
  EXPECT_THROW(X("1") / half_pi, PiSquaredError);
  EXPECT_NEAR(approximate(v).re(), 1.0 + 1.5 * std::numbers::pi, 1e-15);
}

TEST(Backends, MixingIsRejected) {
  EXPECT_THROW(X("1") + F("1"), BackendMismatchError);
  EXPECT_EQ(to_f64(X("1/4")).backend(), Backend::kF64);
  EXPECT_EQ(parse_backend("f64"), Backend::kF64);
  EXPECT_THROW(parse_backend("double"), ParseError);
}

TEST(Complex64, NonFiniteRejectedAtScalarBoundary) {
  EXPECT_THROW(Scalar(Complex64(std::nan(""))), NonFiniteError);
  EXPECT_THROW(F("1e300") * F("1e300"), NonFiniteError);
  EXPECT_THROW(F("1") / F("0"), DivisionByZeroError);
}

TEST(Pochhammer, RisingFactorial) {
  EXPECT_EQ(pochhammer(X("3"), 0), X("1"));
  EXPECT_EQ(pochhammer(X("1"), 5), X("120"));
  EXPECT_EQ(pochhammer(X("1/2"), 3), X("15/8"));
  EXPECT_EQ(pochhammer(X("-2"), 4), X("0"));
}

TEST(Params, BackendAndDomain) {
  Params p{X("1"), std::nullopt, X("1/2"), X("2i"), std::nullopt};
  EXPECT_EQ(p.backend(), Backend::kExact);
  EXPECT_EQ(p.named().size(), 3u);
  p.c = F("0.5");
  EXPECT_THROW(p.backend(), BackendMismatchError);
  EXPECT_EQ(p.to_f64().backend(), Backend::kF64);
  EXPECT_TRUE(is_nonpositive_integer(X("0")));
  EXPECT_TRUE(is_nonpositive_integer(X("-3")));
  EXPECT_FALSE(is_nonpositive_integer(X("-3/2")));
  EXPECT_FALSE(is_nonpositive_integer(X("-3+i")));
  EXPECT_TRUE(is_nonpositive_integer(F("-2")));
}

}  // namespace
}  // namespace hypercoeff
