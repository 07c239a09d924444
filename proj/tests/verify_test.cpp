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

#include <gtest/gtest.h>

#include "hypercoeff/errors.hpp"
#include "hypercoeff/verify.hpp"

namespace hypercoeff {
namespace {

Scalar X(std::string_view s) { return parse_scalar(s, Backend::kExact); }

CoeffStream stream(std::initializer_list<const char*> xs, Backend b) {
  CoeffStream s = unit_stream(b, static_cast<std::int64_t>(xs.size()) - 1);
  std::size_t i = 0;
  for (const char* x : xs) s.coeffs[i++] = parse_scalar(x, b);
  return s;
}

TEST(CompareStreams, ExactIsEquality) {
  const auto y = stream({"1", "1/3", "2i"}, Backend::kExact);
  EXPECT_EQ(compare_streams(y, y, Backend::kExact, 0).verdict, Verdict::kPass);
  const auto x = stream({"1", "1/3", "1+2i"}, Backend::kExact);
  const DeviationReport r = compare_streams(x, y, Backend::kExact, 1.0);
  EXPECT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.first_mismatch, 2);
  EXPECT_EQ(r.got, "1+2i");
  EXPECT_EQ(r.expected, "2i");
  EXPECT_DOUBLE_EQ(r.max_abs, 1.0);
  EXPECT_THROW(compare_streams(x, stream({"1"}, Backend::kExact),
                               Backend::kExact, 0),
               ValidationError);
}

TEST(CompareStreams, F64UsesRelativeFloorOfOne) {
  const auto y = stream({"1000", "0.001"}, Backend::kF64);
  const auto x = stream({"1000.0000001", "0.00100000002"}, Backend::kF64);
  const DeviationReport r = compare_streams(x, y, Backend::kF64, 1e-8);
  EXPECT_EQ(r.verdict, Verdict::kPass);
  EXPECT_NEAR(r.max_rel, 1e-10, 1e-12);
  EXPECT_EQ(compare_streams(x, y, Backend::kF64, 1e-11).first_mismatch, 0);
}

TEST(CompareOracle, FloatAgainstExactReference) {
  const Params q = make_params(Backend::kExact, "1/3", "2/5", "7/4", "3/2");
  const DeviationReport r =
      compare_oracle(parse_family_id("exp-F"), q, 64, Backend::kF64);
  EXPECT_EQ(r.verdict, Verdict::kPass);
  EXPECT_LT(r.max_rel, 1e-12);
}

TEST(DrawParams, ValidAndDeterministic) {
  for (const FamilyInfo& info : list_families()) {
    for (std::uint64_t t = 0; t < 20; ++t) {
      const Params q = draw_params(info, 7, t);
      EXPECT_NO_THROW(validate_params(info, q)) << info.id.str();
      EXPECT_LE(approximate(*q.p).abs(), 2.0);
      for (const auto& [name, v] : q.named()) {
        for (const Rational& r : {v.gaussian().re(), v.gaussian().im()}) {
          EXPECT_LE(std::abs(r.to_double()), 12.0) << name;
        }
      }
      const Params again = draw_params(info, 7, t);
      EXPECT_EQ(to_string(*again.p), to_string(*q.p));
    }
  }
}

TEST(Sweep, DeterministicAndOrdered) {
  const std::vector<FamilyId> fams{parse_family_id("exp-M"),
                                   parse_family_id("binom-K")};
  const auto a = sweep(3, 2, 16, Backend::kExact, kDefaultTolerance, fams);
  const auto b = sweep(3, 2, 16, Backend::kExact, kDefaultTolerance, fams);
  ASSERT_EQ(a.size(), 4u);
  EXPECT_EQ(a[0].family, fams[0]);
  EXPECT_EQ(a[1].family, fams[1]);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].verdict, Verdict::kPass);
    EXPECT_EQ(to_string(*a[i].params.p), to_string(*b[i].params.p));
  }
}

TEST(Bench, Smoke) {
  const BenchReport r = bench(parse_family_id("exp-M"),
                              make_params(Backend::kExact, "1", "", "2", "1"),
                              16, 2);
  EXPECT_EQ(r.N, 16);
  EXPECT_EQ(r.repetitions, 2);
  EXPECT_GT(r.recurrence_seconds, 0.0);
  EXPECT_GT(r.oracle_seconds, 0.0);
}

}  // namespace
}  // namespace hypercoeff
