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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "families_internal.hpp"

namespace hypercoeff {

namespace {

using B = SeriesBase;
using H = HKind;
constexpr Formulation kSingle = Formulation::kSingle;
constexpr Formulation kCombo = Formulation::kCombo;

FamilyInfo entry(B base, H h, Formulation f, int k, int n0, RadiusNote r,
                 bool no_c_two = false, bool implied = false) {
  FamilyInfo info;
  info.id = {base, h, f};
  switch (base) {
    case B::kM: info.arity = {"a", "c"}; break;
    case B::kF: info.arity = {"a", "b", "c"}; break;
    default: break;
  }
  if (h == H::kBinom) info.arity.push_back("theta");
  info.arity.push_back("p");
  info.order = k;
  info.start = n0;
  info.radius = r;
  info.excludes_c_two = no_c_two;
  info.inferred = implied;
  return info;
}

std::vector<FamilyInfo> make_catalogue() {
  const RadiusNote entire = RadiusNote::kEntire;
  const RadiusNote one = RadiusNote::kOne;
  const RadiusNote min_theta = RadiusNote::kMinOneInverseTheta;
  std::vector<FamilyInfo> c;
  // M(a,c;z)
  c.push_back(entry(B::kM, H::kExp, kSingle, 1, 1, entire));
  c.push_back(entry(B::kM, H::kSinh, kCombo, 1, 1, entire));
  c.push_back(entry(B::kM, H::kCosh, kCombo, 1, 1, entire));
  c.push_back(entry(B::kM, H::kSin, kCombo, 1, 1, entire));
  c.push_back(entry(B::kM, H::kCos, kCombo, 1, 1, entire, false, true));
  c.push_back(entry(B::kM, H::kBinom, kSingle, 2, 2,
                    RadiusNote::kInverseTheta));
  c.push_back(entry(B::kM, H::kExpArctan, kSingle, 4, 4, entire));
  for (H h : {H::kSin, H::kCos, H::kSinh, H::kCosh}) {
    c.push_back(entry(B::kM, h, kSingle, 5, 5, entire, true));
  }
  c.push_back(entry(B::kM, H::kArcsin, kSingle, 11, 11, entire, true));
  c.push_back(entry(B::kM, H::kArccos, kSingle, 11, 11, entire, true));
  // F(a,b;c;z)
  c.push_back(entry(B::kF, H::kExp, kSingle, 2, 2, one));
  for (H h : {H::kSinh, H::kCosh, H::kSin, H::kCos}) {
    c.push_back(entry(B::kF, h, kCombo, 2, 2, one));
  }
  c.push_back(entry(B::kF, H::kBinom, kSingle, 2, 2, min_theta));
  c.push_back(entry(B::kF, H::kExpArctan, kSingle, 4, 4, one));
  for (H h : {H::kSin, H::kCos, H::kSinh, H::kCosh}) {
    c.push_back(entry(B::kF, h, kSingle, 9, 9, one, true));
  }
  // K(sqrt z), E(sqrt z)
  for (H h : {H::kExp, H::kBinom}) {
    for (B base : {B::kK, B::kE}) {
      c.push_back(entry(base, h, kSingle, 2, 2,
                        h == H::kBinom ? min_theta : one));
    }
  }
  for (B base : {B::kK, B::kE}) {
    c.push_back(entry(base, H::kExpArctan, kSingle, 4, 4, one));
  }
  for (auto pair : {std::pair{H::kSin, H::kCos}, std::pair{H::kSinh, H::kCosh}}) {
    for (B base : {B::kK, B::kE}) {
      c.push_back(entry(base, pair.first, kSingle, 9, 9, one));
      c.push_back(entry(base, pair.second, kSingle, 9, 9, one));
    }
  }
  return c;
}

std::string_view base_suffix(B base) {
  switch (base) {
    case B::kM: return "M";
    case B::kF: return "F";
    case B::kK: return "K";
    case B::kE: return "E";
    default: return "?";
  }
}

const std::optional<Scalar>& field(const Params& params,
                                   const std::string& name) {
  if (name == "a") return params.a;
  if (name == "b") return params.b;
  if (name == "c") return params.c;
  if (name == "p") return params.p;
  return params.theta;
}

bool equals_two(const Scalar& c) {
  if (c.is_f64()) return c.f64() == Complex64(2.0);
  return c == Scalar::integer(2, c.backend());
}

SpecMeta make_meta(const FamilyInfo& info, const Params& params) {
  SpecMeta meta;
  meta.family = info.id.str();
  meta.base = info.id.base;
  meta.params = params;
  meta.radius = std::string(to_string(info.radius));
  return meta;
}

const FamilyInfo& checked_info(B base, H h, Formulation f,
                               std::string_view builder) {
  FamilyId id{base, h, f};
  for (const FamilyInfo& info : list_families()) {
    if (info.id == id) return info;
  }
  throw CatalogueError(std::string(builder) + ": no family " + id.str());
}

Scalar half_pi(Backend backend) {
  return Scalar::pi_times(Scalar::one(backend) / Scalar::integer(2, backend));
}

}  // namespace

std::string_view to_string(Formulation formulation) {
  return formulation == Formulation::kSingle ? "single" : "combo";
}

std::string_view to_string(TableReading reading) {
  return reading == TableReading::kAsPrinted ? "printed" : "regrouped";
}

TableReading parse_table_reading(std::string_view text) {
  if (text == "printed") return TableReading::kAsPrinted;
  if (text == "regrouped") return TableReading::kRegrouped;
  throw ParseError("unknown table reading '" + std::string(text) +
                   "' (expected printed or regrouped)");
}

std::string FamilyId::str() const {
  std::string out(to_string(h));
  out += '-';
  out += base_suffix(base);
  if (formulation == Formulation::kCombo) out += "-combo";
  return out;
}

FamilyId parse_family_id(std::string_view text) {
  for (const FamilyInfo& info : list_families()) {
    if (info.id.str() == text) return info.id;
  }
  throw CatalogueError("unknown family '" + std::string(text) +
                       "' (see the list command)");
}

std::string_view to_string(RadiusNote radius) {
  switch (radius) {
    case RadiusNote::kEntire: return "entire";
    case RadiusNote::kOne: return "1";
    case RadiusNote::kInverseTheta: return "1/|theta|";
    case RadiusNote::kMinOneInverseTheta: return "min(1,1/|theta|)";
    case RadiusNote::kUnstated: return "unstated";
  }
  return "?";
}

std::optional<double> radius_value(RadiusNote radius, const Params& params) {
  auto inverse_theta = [&]() -> std::optional<double> {
    if (!params.theta) return std::nullopt;
    const double t = approximate(*params.theta).abs();
    if (t == 0.0) return std::nullopt;
    return 1.0 / t;
  };
  switch (radius) {
    case RadiusNote::kOne:
      return 1.0;
    case RadiusNote::kInverseTheta:
      return inverse_theta();
    case RadiusNote::kMinOneInverseTheta: {
      const auto r = inverse_theta();
      return r ? std::min(1.0, *r) : 1.0;
    }
    default:
      return std::nullopt;
  }
}

const std::vector<FamilyInfo>& list_families() {
  static const std::vector<FamilyInfo> catalogue = make_catalogue();
  return catalogue;
}

const FamilyInfo& family_info(const FamilyId& id) {
  return checked_info(id.base, id.h, id.formulation, "family_info");
}

void validate_params(const FamilyInfo& info, const Params& params) {
  const std::string family = info.id.str();
  for (const auto& [name, value] : params.named()) {
    if (std::find(info.arity.begin(), info.arity.end(), name) ==
        info.arity.end()) {
      throw ParameterDomainError(family + " does not take parameter '" +
                                 name + "'");
    }
  }
  for (const std::string& name : info.arity) {
    if (!field(params, name)) {
      throw ParameterDomainError(family + " requires parameter '" + name +
                                 "'");
    }
  }
  params.backend();  // throws on mixed backends
  if (params.c) {
    if (is_nonpositive_integer(*params.c)) {
      throw ParameterDomainError(family + ": c = " + to_string(*params.c) +
                                 " violates -c not in {0, 1, 2, ...}");
    }
    if (info.excludes_c_two && equals_two(*params.c)) {
      throw ParameterDomainError(
          family +
          ": c = 2 is excluded, the recurrence rows carry a (c-2) factor; "
          "use the oracle (cauchy product) path for this c");
    }
  }
}

FamilySpec build_M_family(HKind h, Formulation formulation,
                          const Params& params) {
  const FamilyInfo& info = checked_info(B::kM, h, formulation,
                                        "build_M_family");
  validate_params(info, params);
  const SpecMeta meta = make_meta(info, params);
  if (params.backend() == Backend::kExact) {
    return detail::build_m_typed(
        h, formulation, detail::typed_params<GaussianRational>(params), meta);
  }
  return detail::build_m_typed(
      h, formulation, detail::typed_params<Complex64>(params), meta);
}

FamilySpec build_F_family(HKind h, Formulation formulation,
                          const Params& params, TableReading reading) {
  const FamilyInfo& info = checked_info(B::kF, h, formulation,
                                        "build_F_family");
  validate_params(info, params);
  const SpecMeta meta = make_meta(info, params);
  if (params.backend() == Backend::kExact) {
    return detail::build_f_typed(
        h, formulation, detail::typed_params<GaussianRational>(params), meta,
        reading);
  }
  return detail::build_f_typed(
      h, formulation, detail::typed_params<Complex64>(params), meta, reading);
}

RecurrenceSpec build_elliptic_family(SeriesBase kind, HKind h,
                                     const Params& params) {
  if (kind != B::kK && kind != B::kE) {
    throw CatalogueError("build_elliptic_family: kind must be K or E");
  }
  const FamilyInfo& info = checked_info(kind, h, kSingle,
                                        "build_elliptic_family");
  validate_params(info, params);
  const SpecMeta meta = make_meta(info, params);
  if (params.backend() == Backend::kExact) {
    return detail::build_elliptic_typed(
        kind, h, detail::typed_params<GaussianRational>(params), meta);
  }
  return detail::build_elliptic_typed(
      kind, h, detail::typed_params<Complex64>(params), meta);
}

FamilySpec build_family(const FamilyId& id, const Params& params,
                        TableReading reading) {
  switch (id.base) {
    case B::kM: return build_M_family(id.h, id.formulation, params);
    case B::kF: return build_F_family(id.h, id.formulation, params, reading);
    case B::kK:
    case B::kE:
      if (id.formulation != kSingle) {
        throw CatalogueError("no combo formulation for " + id.str());
      }
      return build_elliptic_family(id.base, id.h, params);
    default:
      throw CatalogueError("build_family: unsupported base");
  }
}

CoeffStream run_family(const FamilySpec& spec, std::int64_t N,
                       RunStats* stats) {
  return std::visit(
      [&](const auto& s) -> CoeffStream {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, RecurrenceSpec>) {
          return run(s, N, stats);
        } else {
          return run_combo(s, N, stats);
        }
      },
      spec);
}

CoeffStream family_stream(const FamilyId& id, const Params& params,
                          std::int64_t N, RunStats* stats,
                          TableReading reading) {
  return run_family(build_family(id, params, reading), N, stats);
}

Params elliptic_base_params(SeriesBase kind, const Params& params) {
  const Backend be = params.backend();
  const Scalar half = Scalar::one(be) / Scalar::integer(2, be);
  Params out = params;
  out.a = kind == B::kK ? half : -half;
  out.b = half;
  out.c = Scalar::one(be);
  return out;
}

CoeffStream oracle_stream(const FamilyId& id, const Params& params,
                          std::int64_t N) {
  validate_params(family_info(id), params);
  const Backend be = params.backend();
  const ElementaryKind h{id.h, *params.p, params.theta};
  CoeffStream base;
  switch (id.base) {
    case B::kM:
      base = kummer_series(*params.a, *params.c, N);
      break;
    case B::kF:
      base = gauss_series(*params.a, *params.b, *params.c, N);
      break;
    case B::kK:
    case B::kE: {
      const Params fixed = elliptic_base_params(id.base, params);
      base = scale(gauss_series(*fixed.a, *fixed.b, *fixed.c, N),
                   half_pi(be));
      break;
    }
    default:
      throw CatalogueError("oracle_stream: unsupported base");
  }
  CoeffStream out = cauchy_product(elementary_series(h, N), base);
  out.base = id.base;
  out.provenance = Provenance::kOracle;
  out.params = params;
  return out;
}

CoeffStream normalize_elliptic(const CoeffStream& stream) {
  CoeffStream out = stream;
  for (Scalar& v : out.coeffs) {
    if (v.is_f64()) {
      v = Scalar(v.f64() / Complex64(std::numbers::pi / 2));
      continue;
    }
    const PiLinear w = v.as_pi_linear();
    if (!w.q0().is_zero()) {
      throw BackendCapabilityError(
          "normalize_elliptic: entry " + to_string(v) +
          " is not a pure multiple of pi");
    }
    v = Scalar(w.q1() * GaussianRational(2));
  }
  return out;
}

}  // namespace hypercoeff
