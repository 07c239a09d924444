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

#include "hypercoeff/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypercoeff/errors.hpp"
#include "hypercoeff/families.hpp"
#include "hypercoeff/verify.hpp"

namespace hypercoeff {

namespace {

using nlohmann::json;

// Flags shared by every family-taking command.
struct FamilyFlags {
  std::string family;
  std::string backend = "exact";
  std::string reading = "printed";
  std::optional<std::string> a, b, c, p, theta;

  void attach(CLI::App* cmd, bool family_required) {
    auto* opt = cmd->add_option("--family", family, "family id (see list)");
    if (family_required) opt->required();
    cmd->add_option("--backend", backend, "exact or f64")
        ->capture_default_str();
    cmd->add_option("--reading", reading,
                    "printed or regrouped (sin/cos x F rows)")
        ->capture_default_str();
    cmd->add_option("--a", a);
    cmd->add_option("--b", b);
    cmd->add_option("--c", c);
    cmd->add_option("--p", p);
    cmd->add_option("--theta", theta);
  }

  bool any_param() const { return a || b || c || p || theta; }

  Params params(Backend be) const {
    auto get = [be](const std::optional<std::string>& s)
        -> std::optional<Scalar> {
      if (!s) return std::nullopt;
      return parse_scalar(*s, be);
    };
    return Params{get(a), get(b), get(c), get(p), get(theta)};
  }
};

bool is_elliptic(const FamilyId& id) {
  return id.base == SeriesBase::kK || id.base == SeriesBase::kE;
}

json params_json(const Params& params) {
  json out = json::object();
  for (const auto& [name, value] : params.named()) out[name] = to_string(value);
  return out;
}

// Exact entries split as q0 + q1*pi; f64 entries as plain numbers.
json coeff_json(std::int64_t n, const Scalar& v) {
  json e;
  e["n"] = n;
  if (v.is_f64()) {
    e["re"] = v.f64().re();
    e["im"] = v.f64().im();
    return e;
  }
  const PiLinear w = v.as_pi_linear();
  e["re"] = w.q0().re().to_string();
  e["im"] = w.q0().im().to_string();
  e["pi_re"] = w.q1().re().to_string();
  e["pi_im"] = w.q1().im().to_string();
  return e;
}

json report_json(const DeviationReport& r) {
  json j;
  j["family"] = r.family.str();
  j["params"] = params_json(r.params);
  j["N"] = r.N;
  j["backend"] = std::string(to_string(r.backend));
  j["tolerance"] = r.tolerance;
  j["max_abs"] = r.max_abs;
  j["max_rel"] = r.max_rel;
  j["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json();
  j["got"] = r.got ? json(*r.got) : json();
  j["expected"] = r.expected ? json(*r.expected) : json();
  j["error"] = r.error ? json(*r.error) : json();
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

std::string csv_number(double x) { return format_double(x); }

void require_count(std::int64_t count) {
  if (count < 1) throw ValidationError("--count must be >= 1");
}

void check_normalized(bool normalized, const FamilyId& id) {
  if (normalized && !is_elliptic(id)) {
    throw ValidationError("--normalized applies only to K and E families, not " +
                          id.str());
  }
}

void note_reading(TableReading reading, const FamilyId& id,
                  std::ostream& err) {
  if (reading == TableReading::kRegrouped && id.base == SeriesBase::kF &&
      (id.h == HKind::kSin || id.h == HKind::kCos) &&
      id.formulation == Formulation::kSingle) {
    err << "note: " << id.str() << " uses the regrouped gamma_4/gamma_5 rows\n";
  }
}

int cmd_coeffs(const FamilyFlags& f, std::int64_t count,
               const std::string& format, bool normalized, std::ostream& out,
               std::ostream& err) {
  const FamilyId id = parse_family_id(f.family);
  const Backend be = parse_backend(f.backend);
  const TableReading reading = parse_table_reading(f.reading);
  require_count(count);
  check_normalized(normalized, id);
  if (format != "json" && format != "csv") {
    throw ParseError("--format must be json or csv, got '" + format + "'");
  }
  const Params params = f.params(be);
  note_reading(reading, id, err);
  CoeffStream s = family_stream(id, params, count - 1, nullptr, reading);
  if (normalized) s = normalize_elliptic(s);

  if (format == "csv") {
    out << (be == Backend::kExact ? "n,re,im,pi_re,pi_im\n" : "n,re,im\n");
    for (std::size_t n = 0; n < s.size(); ++n) {
      const Scalar& v = s[n];
      out << n << ',';
      if (v.is_f64()) {
        out << csv_number(v.f64().re()) << ',' << csv_number(v.f64().im());
      } else {
        const PiLinear w = v.as_pi_linear();
        out << w.q0().re().to_string() << ',' << w.q0().im().to_string()
            << ',' << w.q1().re().to_string() << ','
            << w.q1().im().to_string();
      }
      out << '\n';
    }
    return kExitOk;
  }

  json doc;
  doc["family"] = id.str();
  doc["base"] = std::string(to_string(id.base));
  doc["params"] = params_json(params);
  doc["backend"] = std::string(to_string(be));
  doc["normalized"] = normalized;
  doc["coeffs"] = json::array();
  for (std::size_t n = 0; n < s.size(); ++n) {
    doc["coeffs"].push_back(coeff_json(static_cast<std::int64_t>(n), s[n]));
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_eval(const FamilyFlags& f, const std::string& z_text,
             std::int64_t N, bool normalized, std::ostream& out,
             std::ostream& err) {
  const FamilyId id = parse_family_id(f.family);
  const Backend be = parse_backend(f.backend);
  const TableReading reading = parse_table_reading(f.reading);
  if (N < 0) throw ValidationError("--count must be >= 0");
  check_normalized(normalized, id);
  const Complex64 z = parse_scalar(z_text, Backend::kF64).f64();
  const Params params = f.params(be);
  note_reading(reading, id, err);
  CoeffStream s = family_stream(id, params, N, nullptr, reading);
  if (normalized) s = normalize_elliptic(s);

  const auto r = radius_value(family_info(id).radius, params);
  if (r && !(z.abs() < *r)) {
    err << "warning: |z| = " << format_double(z.abs())
        << " is outside the radius of convergence " << format_double(*r)
        << "; the truncated sum is still evaluated\n";
  }
  Complex64 acc;
  for (std::size_t k = s.size(); k-- > 0;) acc = acc * z + approximate(s[k]);
  if (!acc.is_finite()) throw NonFiniteError("eval: non-finite result");
  out << to_string(acc) << '\n';
  return kExitOk;
}

int cmd_verify(const FamilyFlags& f, std::uint64_t seed, int trials,
               std::int64_t N, double tolerance, const std::string& pairing,
               std::ostream& out, std::ostream& err) {
  const Backend be = parse_backend(f.backend);
  const TableReading reading = parse_table_reading(f.reading);
  if (trials < 0) throw ValidationError("--trials must be >= 0");
  if (N < 0) throw ValidationError("--count must be >= 0");
  std::optional<Pairing> pair;
  if (pairing == "combo-vs-single") {
    pair = Pairing::kComboVsSingle;
  } else if (pairing == "elliptic-vs-specialized-F") {
    pair = Pairing::kEllipticVsSpecializedF;
  } else if (!pairing.empty()) {
    throw ParseError("--pairing must be combo-vs-single or "
                     "elliptic-vs-specialized-F");
  }

  std::vector<DeviationReport> reports;
  if (f.any_param()) {
    if (f.family.empty()) {
      throw ValidationError("explicit parameters need --family");
    }
    const FamilyId id = parse_family_id(f.family);
    // Parse exactly when possible so the oracle side stays exact; --backend
    // selects the recurrence arithmetic.
    Params params;
    try {
      params = f.params(Backend::kExact);
    } catch (const ParseError&) {
      if (be != Backend::kF64) throw;
      params = f.params(Backend::kF64);
    }
    validate_params(family_info(id), params);
    reports.push_back(
        pair ? compare_formulations(*pair, id, params, N, be, tolerance,
                                    reading)
             : compare_oracle(id, params, N, be, tolerance, reading));
  } else if (pair) {
    for (int t = 0; t < trials; ++t) {
      for (const FamilyInfo& info : list_families()) {
        if (!f.family.empty() && info.id.str() != f.family) continue;
        const bool legal =
            *pair == Pairing::kComboVsSingle
                ? (info.id.formulation == Formulation::kSingle &&
                   (info.id.base == SeriesBase::kM ||
                    info.id.base == SeriesBase::kF) &&
                   (info.id.h == HKind::kSin || info.id.h == HKind::kCos ||
                    info.id.h == HKind::kSinh || info.id.h == HKind::kCosh))
                : is_elliptic(info.id);
        if (!legal) {
          if (!f.family.empty()) {
            throw CatalogueError(std::string(to_string(*pair)) +
                                 " does not apply to " + f.family);
          }
          continue;
        }
        reports.push_back(compare_formulations(
            *pair, info.id, draw_params(info, seed, t), N, be, tolerance,
            reading));
      }
    }
  } else {
    std::vector<FamilyId> chosen;
    if (!f.family.empty()) chosen.push_back(parse_family_id(f.family));
    reports = sweep(seed, trials, N, be, tolerance, chosen, reading);
  }

  int findings = 0;
  for (const DeviationReport& r : reports) {
    out << report_json(r).dump() << '\n';
    if (r.verdict == Verdict::kFail) {
      ++findings;
      err << "finding: " << r.family.str();
      if (r.first_mismatch) {
        err << " n=" << *r.first_mismatch << " got " << *r.got
            << " expected " << *r.expected;
      }
      if (r.error) err << " error: " << *r.error;
      err << '\n';
    }
  }
  err << reports.size() << " reports, " << findings << " findings\n";
  return findings == 0 ? kExitOk : kExitFinding;
}

int cmd_bench(const FamilyFlags& f, std::int64_t N, int reps,
              std::uint64_t seed, std::ostream& out) {
  const FamilyId id = parse_family_id(f.family);
  if (N < 2) throw ValidationError("--count must be >= 2");
  if (reps < 1) throw ValidationError("--reps must be >= 1");
  const FamilyInfo& info = family_info(id);
  const Params params =
      f.any_param() ? f.params(Backend::kExact) : draw_params(info, seed, 0);
  validate_params(info, params);
  const BenchReport full = bench(id, params, N, reps);
  const BenchReport half = bench(id, params, N / 2, reps);
  json j;
  j["family"] = id.str();
  j["params"] = params_json(params);
  j["N"] = full.N;
  j["repetitions"] = full.repetitions;
  j["recurrence_seconds"] = full.recurrence_seconds;
  j["oracle_seconds"] = full.oracle_seconds;
  j["ratio"] = full.ratio;
  // Time at N over time at N/2: ~2 for linear, ~4 for quadratic.
  j["recurrence_doubling"] =
      full.recurrence_seconds / std::max(half.recurrence_seconds, 1e-12);
  j["oracle_doubling"] =
      full.oracle_seconds / std::max(half.oracle_seconds, 1e-12);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_list(std::ostream& out) {
  for (const FamilyInfo& info : list_families()) {
    std::string arity;
    for (const std::string& name : info.arity) {
      if (!arity.empty()) arity += ',';
      arity += name;
    }
    out << info.id.str() << " base=" << to_string(info.id.base)
        << " h=" << to_string(info.id.h)
        << " form=" << to_string(info.id.formulation) << " k=" << info.order
        << " n0=" << info.start << " radius=" << to_string(info.radius)
        << " params=" << arity;
    if (info.excludes_c_two) out << " excludes=c=2";
    if (info.inferred) out << " inferred";
    out << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Maclaurin coefficients of products with hypergeometric and "
               "elliptic series"};
  app.name("hypercoeff");
  app.require_subcommand(1);

  FamilyFlags coeffs_flags;
  std::int64_t coeffs_count = 10;
  std::string format = "json";
  bool coeffs_normalized = false;
  auto* coeffs = app.add_subcommand("coeffs", "emit u_0 .. u_{count-1}");
  coeffs_flags.attach(coeffs, true);
  coeffs->add_option("--count", coeffs_count, "number of coefficients")
      ->capture_default_str();
  coeffs->add_option("--format", format, "json or csv")->capture_default_str();
  coeffs->add_flag("--normalized", coeffs_normalized,
                   "divide K/E streams by pi/2");

  FamilyFlags eval_flags;
  eval_flags.backend = "f64";
  std::string z_text;
  std::int64_t eval_count = 30;
  bool eval_normalized = false;
  auto* eval = app.add_subcommand("eval", "Horner sum of u_n z^n, n <= count");
  eval_flags.attach(eval, true);
  eval->add_option("--z", z_text, "point")->required();
  eval->add_option("--count", eval_count, "highest index N")
      ->capture_default_str();
  eval->add_flag("--normalized", eval_normalized, "divide K/E by pi/2");

  FamilyFlags verify_flags;
  std::uint64_t verify_seed = 1;
  int trials = 5;
  std::int64_t verify_count = 40;
  double tolerance = kDefaultTolerance;
  std::string pairing;
  auto* verify = app.add_subcommand("verify", "compare against the oracle");
  verify_flags.attach(verify, false);
  verify->add_option("--seed", verify_seed)->capture_default_str();
  verify->add_option("--trials", trials)->capture_default_str();
  verify->add_option("--count", verify_count, "highest index N")
      ->capture_default_str();
  verify->add_option("--tolerance", tolerance)->capture_default_str();
  verify->add_option("--pairing", pairing,
                     "combo-vs-single or elliptic-vs-specialized-F");

  FamilyFlags bench_flags;
  std::int64_t bench_count = 1024;
  int reps = 3;
  std::uint64_t bench_seed = 1;
  auto* benchc = app.add_subcommand("bench", "recurrence vs oracle timing");
  bench_flags.attach(benchc, true);
  benchc->add_option("--count", bench_count, "highest index N")
      ->capture_default_str();
  benchc->add_option("--reps", reps)->capture_default_str();
  benchc->add_option("--seed", bench_seed, "param draw when none are given")
      ->capture_default_str();

  auto* list = app.add_subcommand("list", "catalogue table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (*coeffs) {
      return cmd_coeffs(coeffs_flags, coeffs_count, format, coeffs_normalized,
                        out, err);
    }
    if (*eval) {
      return cmd_eval(eval_flags, z_text, eval_count, eval_normalized, out,
                      err);
    }
    if (*verify) {
      return cmd_verify(verify_flags, verify_seed, trials, verify_count,
                        tolerance, pairing, out, err);
    }
    if (*benchc) {
      if (bench_flags.backend != "exact" && bench_flags.backend != "f64") {
        throw ParseError("--backend must be exact or f64");
      }
      return cmd_bench(bench_flags, bench_count, reps, bench_seed, out);
    }
    if (*list) return cmd_list(out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitValidation;
}

}  // namespace hypercoeff
