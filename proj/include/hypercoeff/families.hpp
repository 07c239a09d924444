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

// The catalogue of product recurrences h(z) * S(z) with S one of M(a,c;z),
// F(a,b;c;z), K(sqrt z) or E(sqrt z).
//
// Each family carries its seeds u_0..u_{n0} and its coefficient rows as
// stated, so the recurrence output can be judged against series_oracle.
// K and E streams include the pi/2 prefactor; see normalize_elliptic.

#ifndef HYPERCOEFF_FAMILIES_HPP_
#define HYPERCOEFF_FAMILIES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypercoeff/params.hpp"
#include "hypercoeff/recurrence.hpp"
#include "hypercoeff/series_oracle.hpp"

namespace hypercoeff {

enum class Formulation { kSingle, kCombo };

std::string_view to_string(Formulation formulation);

struct FamilyId {
  SeriesBase base = SeriesBase::kM;  // kM, kF, kK or kE
  HKind h = HKind::kExp;
  Formulation formulation = Formulation::kSingle;

  // "exp-M", "sin-M-combo", "binom-K", ...
  std::string str() const;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

// Throws CatalogueError for strings that name no catalogue entry.
FamilyId parse_family_id(std::string_view text);

enum class RadiusNote {
  kEntire,
  kOne,
  kInverseTheta,        // 1/|theta|
  kMinOneInverseTheta,  // min(1, 1/|theta|)
  kUnstated,
};

std::string_view to_string(RadiusNote radius);

// Radius as a number for the given parameters; nullopt when entire or
// unstated.  theta = 0 gives nullopt for kInverseTheta.
std::optional<double> radius_value(RadiusNote radius, const Params& params);

struct FamilyInfo {
  FamilyId id;
  std::vector<std::string> arity;  // required parameter names, in order
  int order = 0;                   // k
  int start = 0;                   // n0
  RadiusNote radius = RadiusNote::kUnstated;
  bool excludes_c_two = false;     // rows carry a (c-2) factor
  bool inferred = false;           // not stated, inferred by symmetry
};

// Stable order: M families, then F, then K/E.
const std::vector<FamilyInfo>& list_families();

// Throws CatalogueError if id is not in the catalogue.
const FamilyInfo& family_info(const FamilyId& id);

// Checks presence, extraneous entries, backend agreement and the c-domain.
// Throws ParameterDomainError / BackendMismatchError.
void validate_params(const FamilyInfo& info, const Params& params);

using FamilySpec = std::variant<RecurrenceSpec, ComboSpec>;

// How ill-formed printed rows are read.  Only the sin/cos x F rows have
// one (gamma_4, gamma_5: a numerator line with no leading operator).
// kAsPrinted takes the missing operator as "+".  kRegrouped applies the
// line's p^2 factor to the whole numerator, as in delta_4 and delta_5.
enum class TableReading { kAsPrinted, kRegrouped };

std::string_view to_string(TableReading reading);
// "printed" or "regrouped"; throws ParseError otherwise.
TableReading parse_table_reading(std::string_view text);

FamilySpec build_M_family(HKind h, Formulation formulation,
                          const Params& params);
FamilySpec build_F_family(HKind h, Formulation formulation,
                          const Params& params,
                          TableReading reading = TableReading::kAsPrinted);
// kind is SeriesBase::kK or kE; params hold p (and theta for binom).
RecurrenceSpec build_elliptic_family(SeriesBase kind, HKind h,
                                     const Params& params);

// Dispatches on id.base.
FamilySpec build_family(const FamilyId& id, const Params& params,
                        TableReading reading = TableReading::kAsPrinted);

CoeffStream run_family(const FamilySpec& spec, std::int64_t N,
                       RunStats* stats = nullptr);

// build_family + run_family.
CoeffStream family_stream(const FamilyId& id, const Params& params,
                          std::int64_t N, RunStats* stats = nullptr,
                          TableReading reading = TableReading::kAsPrinted);

// cauchy_product(elementary_series(h), base series) for the same id and
// params.  For K/E the base series is (pi/2) F(+-1/2, 1/2; 1; z).
CoeffStream oracle_stream(const FamilyId& id, const Params& params,
                          std::int64_t N);

// (a, b, c) fixed by the K/E corollaries.
Params elliptic_base_params(SeriesBase kind, const Params& params);

// Divides every entry by pi/2.  Exact entries are expected to be pure
// pi multiples (q0 = 0); the result is GaussianRational.
CoeffStream normalize_elliptic(const CoeffStream& stream);

}  // namespace hypercoeff

#endif  // HYPERCOEFF_FAMILIES_HPP_
