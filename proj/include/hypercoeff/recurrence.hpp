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

// Forward evaluation of linear recurrences with index-dependent
// coefficients,
//
//   u_{n+1} = sum_{i=0}^{k} beta_i(n) u_{n-i},   n >= n0,
//
// started from the seeds u_0..u_{n0}.

#ifndef HYPERCOEFF_RECURRENCE_HPP_
#define HYPERCOEFF_RECURRENCE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypercoeff/numerics.hpp"
#include "hypercoeff/params.hpp"
#include "hypercoeff/series_oracle.hpp"

namespace hypercoeff {

// n -> (beta_0(n), ..., beta_k(n)).  Throws SingularIndexError when a
// denominator factor vanishes at n.
using RowFn = std::function<std::vector<Scalar>(std::int64_t n)>;

struct SpecMeta {
  std::string family;
  SeriesBase base = SeriesBase::kProduct;
  Params params;
  std::string radius;
};

struct RecurrenceSpec {
  int order = 0;  // k
  int start = 0;  // n0; requires n0 >= k and seeds.size() == n0 + 1
  std::vector<Scalar> seeds;
  RowFn row;
  SpecMeta meta;
};

enum class Combiner {
  kHalfDifference,        // (u - v) / 2
  kHalfSum,               // (u + v) / 2
  kHalfDifferenceOverI,   // (u - v) / (2i)
};

struct ComboSpec {
  RecurrenceSpec left;   // u
  RecurrenceSpec right;  // v
  Combiner combiner = Combiner::kHalfSum;
  SpecMeta meta;
};

// Scalar multiplications performed by the engine itself (row evaluation is
// not counted).
struct RunStats {
  std::uint64_t steps = 0;
  std::uint64_t multiplications = 0;
};

// u_0..u_N.  Cost: (k+1) multiplications per step beyond n0.
CoeffStream run(const RecurrenceSpec& spec, std::int64_t N,
                RunStats* stats = nullptr);

// Both branches to N, then combined entry-wise.
CoeffStream run_combo(const ComboSpec& spec, std::int64_t N,
                      RunStats* stats = nullptr);

}  // namespace hypercoeff

#endif  // HYPERCOEFF_RECURRENCE_HPP_
