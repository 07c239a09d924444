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

#include <gtest/gtest.h>

#include "hypercoeff/errors.hpp"
#include "hypercoeff/recurrence.hpp"

namespace hypercoeff {
namespace {

Scalar X(long long v) { return Scalar::integer(v, Backend::kExact); }

RecurrenceSpec fibonacci() {
  RecurrenceSpec s;
  s.order = 1;
  s.start = 1;
  s.seeds = {X(0), X(1)};
  s.row = [](std::int64_t) { return std::vector<Scalar>{X(1), X(1)}; };
  return s;
}

TEST(Run, FibonacciAndStats) {
  RunStats stats;
  const CoeffStream s = run(fibonacci(), 10, &stats);
  ASSERT_EQ(s.size(), 11u);
  EXPECT_EQ(s[10], X(55));
  EXPECT_EQ(s.provenance, Provenance::kRecurrence);
  EXPECT_EQ(stats.steps, 9u);
  EXPECT_EQ(stats.multiplications, 18u);  // k + 1 per step
}

TEST(Run, ShortRequestsReturnSeedPrefix) {
  const CoeffStream s = run(fibonacci(), 0);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], X(0));
}

TEST(Run, MalformedSpecs) {
  RecurrenceSpec s = fibonacci();
  s.seeds.pop_back();
  EXPECT_THROW(run(s, 5), std::invalid_argument);
  s = fibonacci();
  s.start = 0;
  s.seeds = {X(1)};
  EXPECT_THROW(run(s, 5), std::invalid_argument);
  s = fibonacci();
  s.row = [](std::int64_t) { return std::vector<Scalar>{X(1)}; };
  EXPECT_THROW(run(s, 5), std::logic_error);
  EXPECT_THROW(run(fibonacci(), -1), std::invalid_argument);
}

TEST(Run, SingularRowNamesTheIndex) {
  RecurrenceSpec s = fibonacci();
  // beta_0 = 1/(n - 4)
  s.row = [](std::int64_t n) {
    return std::vector<Scalar>{X(1) / X(n - 4), X(1)};
  };
  try {
    run(s, 10);
    FAIL() << "expected SingularIndexError";
  } catch (const SingularIndexError& e) {
    EXPECT_EQ(e.index(), 4);
  }
}

TEST(Run, NonFiniteNamesTheTarget) {
  RecurrenceSpec s;
  s.order = 0;
  s.start = 0;
  s.seeds = {Scalar(Complex64(1.0))};
  s.row = [](std::int64_t) {
    return std::vector<Scalar>{Scalar(Complex64(1e200))};
  };
  try {
    run(s, 5);
    FAIL() << "expected NonFiniteError";
  } catch (const NonFiniteError& e) {
    EXPECT_NE(std::string(e.what()).find("u_2"), std::string::npos);
  }
}

TEST(RunCombo, Combiners) {
  // u_n = 2^n, v_n = 1: (u+v)/2, (u-v)/2, (u-v)/(2i)
  RecurrenceSpec u;
  u.order = 0;
  u.start = 0;
  u.seeds = {X(1)};
  u.row = [](std::int64_t) { return std::vector<Scalar>{X(2)}; };
  RecurrenceSpec v = u;
  v.row = [](std::int64_t) { return std::vector<Scalar>{X(1)}; };
  ComboSpec c{u, v, Combiner::kHalfSum, {}};
  EXPECT_EQ(run_combo(c, 3)[3], parse_scalar("9/2", Backend::kExact));
  c.combiner = Combiner::kHalfDifference;
  EXPECT_EQ(run_combo(c, 3)[3], parse_scalar("7/2", Backend::kExact));
  c.combiner = Combiner::kHalfDifferenceOverI;
  EXPECT_EQ(run_combo(c, 3)[3], parse_scalar("-7/2i", Backend::kExact));
}

}  // namespace
}  // namespace hypercoeff
