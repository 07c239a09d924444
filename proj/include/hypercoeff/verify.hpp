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

// Recurrence output judged against the oracle and against alternate
// formulations, plus the recurrence/oracle timing contrast.
//
// Error metric: |x - y| / max(1, |y|), y being the reference (oracle) value.

#ifndef HYPERCOEFF_VERIFY_HPP_
#define HYPERCOEFF_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercoeff/families.hpp"

namespace hypercoeff {

inline constexpr double kDefaultTolerance = 1e-8;

enum class Verdict { kPass, kFail };

std::string_view to_string(Verdict verdict);

struct DeviationReport {
  FamilyId family;
  Params params;
  std::int64_t N = 0;
  Backend backend = Backend::kExact;
  double tolerance = kDefaultTolerance;
  double max_abs = 0.0;
  double max_rel = 0.0;
  // Exact: first index with x != y.  f64: first index with rel > tolerance.
  std::optional<std::int64_t> first_mismatch;
  // Values at first_mismatch, in to_string form.
  std::optional<std::string> got;
  std::optional<std::string> expected;
  // Set when the run raised a numeric error instead of producing a stream.
  std::optional<std::string> error;
  Verdict verdict = Verdict::kPass;
};

struct BenchReport {
  FamilyId family;
  std::int64_t N = 0;
  int repetitions = 0;
  double recurrence_seconds = 0.0;  // best of repetitions
  double oracle_seconds = 0.0;      // best of repetitions
  double ratio = 0.0;               // oracle / recurrence
};

// Compares x (under test) with y (reference) entry by entry.  Lengths must
// agree.  Exact streams are compared by equality, f64 by tolerance.
DeviationReport compare_streams(const CoeffStream& x, const CoeffStream& y,
                                Backend backend, double tolerance);

// Family spec versus the Cauchy-product oracle.  With backend f64 and exact
// params, the recurrence runs in f64 and the oracle stays exact.
DeviationReport compare_oracle(const FamilyId& id, const Params& params,
                               std::int64_t N, Backend backend,
                               double tolerance = kDefaultTolerance,
                               TableReading reading = TableReading::kAsPrinted);

enum class Pairing {
  kComboVsSingle,             // {sin,cos,sinh,cosh} x {M,F}
  kEllipticVsSpecializedF,    // K/E family vs (pi/2) * F family at (+-1/2,1/2,1)
};

std::string_view to_string(Pairing pairing);

// For kComboVsSingle id may name either formulation; for the elliptic
// pairing id is the K or E family.  Throws CatalogueError otherwise.
DeviationReport compare_formulations(
    Pairing pairing, const FamilyId& id, const Params& params, std::int64_t N,
    Backend backend, double tolerance = kDefaultTolerance,
    TableReading reading = TableReading::kAsPrinted);

// f64 timing of the recurrence and the oracle over the same params.
BenchReport bench(const FamilyId& id, const Params& params, std::int64_t N,
                  int repetitions);

// Deterministic draw of valid exact params for a family: rationals with
// numerators/denominators <= 12, |p| <= 2, c avoiding the excluded set.
Params draw_params(const FamilyInfo& info, std::uint64_t seed,
                   std::uint64_t trial);

// One report per (trial, family), trial-major, catalogue order within.
// Numeric errors become failing reports.
std::vector<DeviationReport> sweep(
    std::uint64_t seed, int trials, std::int64_t N, Backend backend,
    double tolerance = kDefaultTolerance,
    const std::vector<FamilyId>& families = {},
    TableReading reading = TableReading::kAsPrinted);

}  // namespace hypercoeff

#endif  // HYPERCOEFF_VERIFY_HPP_
