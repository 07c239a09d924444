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

// Acceptance run: one PASS/FAIL line per criterion.
//
// A FAIL is printed whenever a criterion fails.  The process still exits 0
// when every failing item is explained by a known row defect (listed in
// README.md) and every known defect actually shows up; a defect that
// stops reproducing is as much a failure as a new mismatch.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hypercoeff/cli.hpp"
#include "hypercoeff/errors.hpp"
#include "hypercoeff/verify.hpp"

namespace hypercoeff {
namespace {

constexpr std::uint64_t kSeed = 1;
constexpr int kTrials = 5;

// Known defects.  D1: sin/cos x F rows as printed.  D2: arcsin/arccos x M
// order-11 row.  D3: forward instability of the trig single rows in f64.
enum class Defect { kTrigF, kInverseTrigM, kFloatTrig };

const char* defect_name(Defect d) {
  switch (d) {
    case Defect::kTrigF: return "D1";
    case Defect::kInverseTrigM: return "D2";
    case Defect::kFloatTrig: return "D3";
  }
  return "?";
}

bool is_trig(HKind h) {
  return h == HKind::kSin || h == HKind::kCos || h == HKind::kSinh ||
         h == HKind::kCosh;
}

// Defects that can explain a failure of `f` in an exact comparison.
// Elliptic pairings run the sin/cos x F rows, so D1 reaches them too.
std::set<Defect> exact_defects(const FamilyId& f, bool elliptic_pairing) {
  std::set<Defect> out;
  if (f.formulation != Formulation::kSingle) return out;
  if (f.base == SeriesBase::kM &&
      (f.h == HKind::kArcsin || f.h == HKind::kArccos)) {
    out.insert(Defect::kInverseTrigM);
  }
  if ((f.base == SeriesBase::kF || elliptic_pairing) &&
      (f.h == HKind::kSin || f.h == HKind::kCos)) {
    out.insert(Defect::kTrigF);
  }
  return out;
}

std::set<Defect> float_defects(const FamilyId& f) {
  std::set<Defect> out = exact_defects(f, false);
  if (f.formulation == Formulation::kSingle && is_trig(f.h)) {
    out.insert(Defect::kFloatTrig);
  }
  return out;
}

struct Tally {
  int total = 0;
  std::vector<std::string> failures;  // "family[@n]"
  bool unexplained = false;
  std::set<Defect> seen;

  void add(const std::string& what, bool ok, const std::set<Defect>& known) {
    ++total;
    if (ok) return;
    failures.push_back(what);
    if (known.empty()) unexplained = true;
    seen.insert(known.begin(), known.end());
  }
};

struct Outcome {
  bool pass = true;
  bool explained = true;
  std::string detail;
};

std::set<Defect> g_reproduced;
bool g_ok = true;

std::string join_defects(const std::set<Defect>& ds) {
  std::string s;
  for (Defect d : ds) s += (s.empty() ? "" : ",") + std::string(defect_name(d));
  return s;
}

Outcome from_tally(const Tally& t) {
  Outcome o;
  o.pass = t.failures.empty();
  o.explained = !t.unexplained;
  std::ostringstream s;
  s << t.total - static_cast<int>(t.failures.size()) << "/" << t.total
    << " ok";
  if (!t.failures.empty()) {
    std::set<std::string> fams;
    for (const std::string& f : t.failures) fams.insert(f.substr(0, f.find('@')));
    s << "; failing:";
    for (const std::string& f : fams) s << " " << f;
    if (o.explained) s << " (known " << join_defects(t.seen) << ")";
  }
  g_reproduced.insert(t.seen.begin(), t.seen.end());
  o.detail = s.str();
  return o;
}

void report(int n, const char* title, const Outcome& o, double seconds) {
  std::printf("criterion %d %s: %s (%s) [%.2fs]\n", n, o.pass ? "PASS" : "FAIL",
              title, o.detail.c_str(), seconds);
  if (!o.pass && !o.explained) g_ok = false;
  std::fflush(stdout);
}

void note(const std::string& line) {
  std::printf("  info: %s\n", line.c_str());
  std::fflush(stdout);
}

template <typename F>
void timed(int n, const char* title, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, false, std::string("exception: ") + e.what()};
  }
  const std::chrono::duration<double> dt =
      std::chrono::steady_clock::now() - t0;
  report(n, title, o, dt.count());
}

Scalar X(std::string_view s) { return parse_scalar(s, Backend::kExact); }

std::string where(const DeviationReport& r) {
  std::string s = r.family.str();
  if (r.first_mismatch) s += "@" + std::to_string(*r.first_mismatch);
  return s;
}

// --- 1 -----------------------------------------------------------------------

Tally master_sweep(TableReading reading) {
  Tally t;
  for (const DeviationReport& r :
       sweep(kSeed, kTrials, 40, Backend::kExact, 0.0, {}, reading)) {
    t.add(where(r), r.verdict == Verdict::kPass,
          exact_defects(r.family, false));
  }
  return t;
}

Outcome criterion1() {
  const Outcome o = from_tally(master_sweep(TableReading::kAsPrinted));
  const Tally rg = master_sweep(TableReading::kRegrouped);
  std::ostringstream s;
  s << "regrouped sin/cos x F reading: " << rg.total - rg.failures.size()
    << "/" << rg.total << " ok";
  if (!rg.failures.empty()) {
    std::set<std::string> fams;
    for (const std::string& f : rg.failures) fams.insert(f.substr(0, f.find('@')));
    s << ", failing:";
    for (const std::string& f : fams) s << " " << f;
  }
  note(s.str());
  return o;
}

// --- 2 -----------------------------------------------------------------------

Outcome criterion2() {
  Tally t;
  for (const FamilyInfo& info : list_families()) {
    for (int trial = 0; trial < kTrials; ++trial) {
      const Params q = draw_params(info, kSeed, trial);
      const CoeffStream seeds = family_stream(info.id, q, info.start);
      const CoeffStream oracle = oracle_stream(info.id, q, info.start);
      t.add(info.id.str(), seeds.coeffs == oracle.coeffs, {});
    }
  }
  return from_tally(t);
}

// --- 3 -----------------------------------------------------------------------

Tally pairings(TableReading reading) {
  Tally t;
  for (const FamilyInfo& info : list_families()) {
    const FamilyId& f = info.id;
    for (int trial = 0; trial < kTrials; ++trial) {
      if (f.formulation == Formulation::kCombo) {
        FamilyId single = f;
        single.formulation = Formulation::kSingle;
        const Params q = draw_params(family_info(single), kSeed, trial);
        const DeviationReport r = compare_formulations(
            Pairing::kComboVsSingle, f, q, 40, Backend::kExact, 0.0, reading);
        t.add(where(r), r.verdict == Verdict::kPass,
              exact_defects(single, false));
      } else if (f.base == SeriesBase::kK || f.base == SeriesBase::kE) {
        const Params q = draw_params(info, kSeed, trial);
        const DeviationReport r =
            compare_formulations(Pairing::kEllipticVsSpecializedF, f, q, 40,
                                 Backend::kExact, 0.0, reading);
        t.add(where(r), r.verdict == Verdict::kPass, exact_defects(f, true));
      }
    }
  }
  return t;
}

Outcome criterion3() {
  const Outcome o = from_tally(pairings(TableReading::kAsPrinted));
  const Tally rg = pairings(TableReading::kRegrouped);
  note("regrouped sin/cos x F reading: " +
       std::to_string(rg.total - rg.failures.size()) + "/" +
       std::to_string(rg.total) + " pairings ok");
  return o;
}

// --- 4 -----------------------------------------------------------------------

constexpr std::int64_t kDegN = 32;

CoeffStream scaled(CoeffStream s, const Scalar& k) {
  for (Scalar& v : s.coeffs) v = v * k;
  return s;
}

CoeffStream base_series(const FamilyId& f, const Params& q) {
  switch (f.base) {
    case SeriesBase::kM: return kummer_series(*q.a, *q.c, kDegN);
    case SeriesBase::kF: return gauss_series(*q.a, *q.b, *q.c, kDegN);
    default: {
      const Params e = elliptic_base_params(f.base, q);
      return scaled(gauss_series(*e.a, *e.b, *e.c, kDegN),
                    Scalar::pi_times(X("1/2")));
    }
  }
}

Params degenerate_base(const FamilyId& f) {
  switch (f.base) {
    case SeriesBase::kM:
      return make_params(Backend::kExact, "2/7", "", "7/3", "3/2");
    case SeriesBase::kF:
      return make_params(Backend::kExact, "2/7", "-3/4", "7/3", "3/2");
    default:
      return make_params(Backend::kExact, "", "", "", "3/2");
  }
}

Outcome criterion4() {
  Tally t;
  auto check = [&](const FamilyId& f, const Params& q, const CoeffStream& want,
                   const std::string& tag) {
    bool ok = false;
    try {
      ok = family_stream(f, q, kDegN).coeffs == want.coeffs;
    } catch (const NumericError&) {
    }
    t.add(f.str() + "[" + tag + "]", ok, exact_defects(f, false));
  };
  for (const FamilyInfo& info : list_families()) {
    const FamilyId& f = info.id;
    const bool binom = f.h == HKind::kBinom;
    Params q = degenerate_base(f);
    if (binom) q.theta = X("3/5");

    // a = 0, and b = 0 for F
    if (f.base == SeriesBase::kM || f.base == SeriesBase::kF) {
      Params z = q;
      z.a = X("0");
      check(f, z, elementary_series({f.h, *z.p, z.theta}, kDegN), "a=0");
      if (f.base == SeriesBase::kF) {
        z = q;
        z.b = X("0");
        check(f, z, elementary_series({f.h, *z.p, z.theta}, kDegN), "b=0");
      }
    }
    // p = 0
    {
      Params z = q;
      z.p = X("0");
      const CoeffStream base = base_series(f, z);
      CoeffStream want = base;
      if (f.h == HKind::kSin || f.h == HKind::kSinh || f.h == HKind::kArcsin) {
        want = scaled(base, X("0"));
      } else if (f.h == HKind::kArccos) {
        want = scaled(base, Scalar::pi_times(X("1/2")));
      }
      check(f, z, want, "p=0");
    }
    // theta = 0
    if (binom) {
      Params z = q;
      z.theta = X("0");
      check(f, z, base_series(f, z), "theta=0");
    }
  }
  {
    const Scalar p = X("-4/3");
    CoeffStream want = unit_stream(Backend::kExact, kDegN);
    for (std::int64_t n = 1; n <= kDegN; ++n) {
      want.coeffs[n] = want.coeffs[n - 1] * (p + X("1")) /
                       Scalar::integer(n, Backend::kExact);
    }
    check(parse_family_id("exp-M"),
          make_params(Backend::kExact, "5/2", "", "5/2", "-4/3"), want, "c=a");
  }
  {
    const Params q = make_params(Backend::kExact, "1/3", "5/6", "5/6", "7/4", "1");
    check(parse_family_id("binom-F"), q,
          elementary_series({HKind::kBinom, *q.p - *q.a, X("1")}, kDegN),
          "b=c,theta=1");
  }
  return from_tally(t);
}

// --- 5 -----------------------------------------------------------------------

Outcome criterion5() {
  Tally t;
  {
    const CoeffStream s = normalize_elliptic(family_stream(
        parse_family_id("exp-K"), make_params(Backend::kExact, "", "", "", "1"),
        2));
    t.add("exp-K", s[0] == X("1") && s[1] == X("5/4") && s[2] == X("57/64"),
          {});
  }
  for (const char* theta : {"1/3", "-2", "5/7+i"}) {
    const CoeffStream s = normalize_elliptic(family_stream(
        parse_family_id("binom-K"),
        make_params(Backend::kExact, "", "", "", "3/2", theta), 1));
    t.add("binom-K", s[1] == (X("1") - X("4") * X(theta) * X("3/2")) / X("4"),
          {});
  }
  t.add("exp-F",
        family_stream(parse_family_id("exp-F"),
                      make_params(Backend::kExact, "1", "1", "1", "1"), 2)[2] ==
            X("5/2"),
        {});
  {
    const Scalar p = X("2/3");
    const CoeffStream s =
        family_stream(parse_family_id("arcsin-M"),
                      make_params(Backend::kExact, "0", "", "5", "2/3"), 11);
    const CoeffStream want = elementary_series({HKind::kArcsin, p, {}}, 11);
    auto pw = [&](int k) {
      Scalar r = X("1");
      for (int i = 0; i < k; ++i) r = r * p;
      return r;
    };
    t.add("arcsin-M", s.coeffs == want.coeffs &&
                          s[5] == X("3/40") * pw(5) &&
                          s[7] == X("5/112") * pw(7) &&
                          s[9] == X("35/1152") * pw(9) &&
                          s[11] == X("63/2816") * pw(11),
          {});
  }
  return from_tally(t);
}

// --- 6 -----------------------------------------------------------------------

Outcome criterion6() {
  Tally t;
  std::map<std::string, double> worst;
  for (const DeviationReport& r :
       sweep(kSeed, kTrials, 64, Backend::kF64, kDefaultTolerance)) {
    t.add(where(r), r.verdict == Verdict::kPass, float_defects(r.family));
    if (r.verdict == Verdict::kFail && !exact_defects(r.family, false).size()) {
      double& w = worst[r.family.str()];
      w = std::max(w, r.max_rel);
    }
  }
  for (const auto& [fam, rel] : worst) {
    std::ostringstream s;
    s << fam << " worst rel " << rel;
    note(s.str());
  }
  return from_tally(t);
}

// --- 7 -----------------------------------------------------------------------

Outcome criterion7() {
  const FamilyId f = parse_family_id("exp-F");
  const Params q = make_params(Backend::kExact, "1/3", "2/5", "7/4", "3/2");
  const BenchReport big = bench(f, q, 8192, 5);
  const BenchReport half = bench(f, q, 4096, 5);
  const double doubling = big.recurrence_seconds / half.recurrence_seconds;
  Outcome o;
  o.pass = big.ratio >= 5.0 && doubling <= 2.5;
  o.explained = false;
  std::ostringstream s;
  s << "N=8192 oracle/recurrence " << big.ratio << "x (need >= 5), "
    << "recurrence 4096->8192 " << doubling << "x (need <= 2.5)";
  o.detail = s.str();
  return o;
}

// --- 8 -----------------------------------------------------------------------

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

Outcome criterion8() {
  Tally t;
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"coeffs", "--family", "arccos-M", "--a",
                                 "1/3", "--c", "7/4", "--p", "3/2+i",
                                 "--count", "12"},
        std::vector<std::string>{"coeffs", "--family", "binom-E", "--p",
                                 "0.75", "--theta", "-2", "--backend", "f64"},
        std::vector<std::string>{"coeffs", "--family", "exp-K", "--p", "1",
                                 "--normalized"}}) {
    const CliRun r = cli(args);
    t.add("json:" + args[2],
          r.code == kExitOk &&
              nlohmann::json::parse(r.out).dump(2) + "\n" == r.out,
          {});
  }
  const std::vector<std::pair<std::vector<std::string>, int>> codes{
      {{"list"}, kExitOk},
      {{"verify", "--family", "exp-M", "--a", "1/3", "--c", "7/4", "--p",
        "3/2"},
       kExitOk},
      {{"verify", "--family", "arccos-M", "--a", "1/3", "--c", "7/4", "--p",
        "3/2"},
       kExitFinding},
      {{"verify", "--family", "sin-M", "--a", "1/2", "--c", "2", "--p", "1"},
       kExitValidation},
      {{"coeffs", "--family", "exp-M", "--a", "x", "--c", "1", "--p", "1"},
       kExitValidation},
      {{"coeffs", "--family", "exp-M", "--backend", "f64", "--a", "1e200",
        "--c", "1e-200", "--p", "1e200", "--count", "40"},
       kExitNumeric},
  };
  for (const auto& [args, want] : codes) {
    t.add("exit:" + args[0] + "=" + std::to_string(want), cli(args).code == want,
          {});
  }
  const CliRun a = cli({"verify", "--seed", "1"});
  const CliRun b = cli({"verify", "--seed", "1"});
  t.add("verify-seed-1", a.code == b.code && a.out == b.out, {});
  return from_tally(t);
}

int run_acceptance() {
  timed(1, "master oracle equality", criterion1);
  timed(2, "seed certification", criterion2);
  timed(3, "formulation agreement", criterion3);
  timed(4, "degeneracy suite", criterion4);
  timed(5, "spot values", criterion5);
  timed(6, "float fidelity", criterion6);
  timed(7, "performance", criterion7);
  timed(8, "CLI contract", criterion8);

  bool all_reproduced = true;
  for (Defect d : {Defect::kTrigF, Defect::kInverseTrigM, Defect::kFloatTrig}) {
    if (!g_reproduced.count(d)) {
      std::printf("known defect %s did not reproduce\n", defect_name(d));
      all_reproduced = false;
    }
  }
  const bool ok = g_ok && all_reproduced;
  std::printf("acceptance: %s\n",
              ok ? "every FAIL is a known defect (D1-D3), all reproduced"
                 : "UNEXPECTED result");
  return ok ? 0 : 1;
}

}  // namespace
}  // namespace hypercoeff

int main() { return hypercoeff::run_acceptance(); }
