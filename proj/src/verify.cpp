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

#include "hypercoeff/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "hypercoeff/errors.hpp"

namespace hypercoeff {

namespace {

bool is_trig(HKind h) {
  return h == HKind::kSin || h == HKind::kCos || h == HKind::kSinh ||
         h == HKind::kCosh;
}

// Portable: seed_seq and mt19937_64 are fully specified, and the draws
// below use plain modular reduction instead of the distributions.
class Draw {
 public:
  Draw(std::uint64_t seed, std::uint64_t trial, std::uint64_t family) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(family)};
    rng_.seed(seq);
  }

  long long uniform(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(rng_() % span);
  }

  Scalar rational(long long max_num) {
    const long long den = uniform(1, 12);
    const long long num = uniform(-max_num, max_num);
    return Scalar(GaussianRational(Rational(num, den)));
  }

  // |p| <= 2.
  Scalar bounded(long long bound) {
    const long long den = uniform(1, 12);
    const long long num = uniform(-std::min(12LL, bound * den),
                                  std::min(12LL, bound * den));
    return Scalar(GaussianRational(Rational(num, den)));
  }

 private:
  std::mt19937_64 rng_;
};

std::uint64_t catalogue_index(const FamilyId& id) {
  const auto& all = list_families();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].id == id) return i;
  }
  throw CatalogueError("unknown family " + id.str());
}

DeviationReport failed_run(const FamilyId& id, const Params& params,
                           std::int64_t N, Backend backend, double tolerance,
                           const std::exception& e) {
  DeviationReport report;
  report.family = id;
  report.params = params;
  report.N = N;
  report.backend = backend;
  report.tolerance = tolerance;
  report.error = e.what();
  report.max_abs = std::numeric_limits<double>::infinity();
  report.max_rel = std::numeric_limits<double>::infinity();
  report.verdict = Verdict::kFail;
  return report;
}

Params for_backend(const Params& params, Backend backend) {
  return backend == Backend::kF64 ? params.to_f64() : params;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::kPass ? "pass" : "fail";
}

std::string_view to_string(Pairing pairing) {
  return pairing == Pairing::kComboVsSingle ? "combo-vs-single"
                                            : "elliptic-vs-specialized-F";
}

DeviationReport compare_streams(const CoeffStream& x, const CoeffStream& y,
                                Backend backend, double tolerance) {
  if (x.size() != y.size()) {
    throw ValidationError("compare_streams: lengths differ (" +
                          std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()) + ")");
  }
  DeviationReport report;
  report.N = static_cast<std::int64_t>(x.size()) - 1;
  report.backend = backend;
  report.tolerance = tolerance;
  for (std::size_t n = 0; n < x.size(); ++n) {
    double abs_err;
    double ref;
    bool mismatch = false;
    if (backend == Backend::kExact) {
      if (x[n].is_f64() || y[n].is_f64()) {
        throw BackendMismatchError(
            "compare_streams: exact comparison of an f64 stream");
      }
      const Scalar diff = x[n] - y[n];
      mismatch = !diff.is_zero();
      abs_err = approximate(diff).abs();
      ref = approximate(y[n]).abs();
    } else {
      const Complex64 xv = approximate(x[n]);
      const Complex64 yv = approximate(y[n]);
      abs_err = (xv - yv).abs();
      ref = yv.abs();
    }
    const double rel = abs_err / std::max(1.0, ref);
    if (backend == Backend::kF64) mismatch = !(rel <= tolerance);
    report.max_abs = std::max(report.max_abs, abs_err);
    report.max_rel = std::max(report.max_rel, rel);
    if (std::isnan(rel)) report.max_rel = rel;
    if (mismatch && !report.first_mismatch) {
      report.first_mismatch = static_cast<std::int64_t>(n);
      report.got = to_string(x[n]);
      report.expected = to_string(y[n]);
    }
  }
  report.verdict = report.first_mismatch ? Verdict::kFail : Verdict::kPass;
  return report;
}

DeviationReport compare_oracle(const FamilyId& id, const Params& params,
                               std::int64_t N, Backend backend,
                               double tolerance, TableReading reading) {
  validate_params(family_info(id), params);
  const Params run_params = for_backend(params, backend);
  try {
    const CoeffStream x = family_stream(id, run_params, N, nullptr, reading);
    const CoeffStream y = oracle_stream(id, params, N);
    DeviationReport report = compare_streams(x, y, backend, tolerance);
    report.family = id;
    report.params = params;
    return report;
  } catch (const NumericError& e) {
    return failed_run(id, params, N, backend, tolerance, e);
  }
}

DeviationReport compare_formulations(Pairing pairing, const FamilyId& id,
                                     const Params& params, std::int64_t N,
                                     Backend backend, double tolerance,
                                     TableReading reading) {
  const Params run_params = for_backend(params, backend);
  CoeffStream x;
  CoeffStream y;
  if (pairing == Pairing::kComboVsSingle) {
    if ((id.base != SeriesBase::kM && id.base != SeriesBase::kF) ||
        !is_trig(id.h)) {
      throw CatalogueError("combo-vs-single needs a sin/cos/sinh/cosh M or F "
                           "family, got " + id.str());
    }
    const FamilyId single{id.base, id.h, Formulation::kSingle};
    const FamilyId combo{id.base, id.h, Formulation::kCombo};
    x = family_stream(single, run_params, N, nullptr, reading);
    y = family_stream(combo, run_params, N);
  } else {
    if (id.base != SeriesBase::kK && id.base != SeriesBase::kE) {
      throw CatalogueError("elliptic-vs-specialized-F needs a K or E family, "
                           "got " + id.str());
    }
    const FamilyId f{SeriesBase::kF, id.h, Formulation::kSingle};
    const Params f_params = elliptic_base_params(id.base, run_params);
    const Backend be = run_params.backend();
    x = family_stream(id, run_params, N);
    y = scale(family_stream(f, f_params, N, nullptr, reading),
              Scalar::pi_times(Scalar::one(be) / Scalar::integer(2, be)));
  }
  DeviationReport report = compare_streams(x, y, backend, tolerance);
  report.family = id;
  report.params = params;
  return report;
}

BenchReport bench(const FamilyId& id, const Params& params, std::int64_t N,
                  int repetitions) {
  const Params f = params.to_f64();
  const FamilySpec spec = build_family(id, f);
  BenchReport report;
  report.family = id;
  report.N = N;
  report.repetitions = std::max(1, repetitions);
  report.recurrence_seconds = std::numeric_limits<double>::infinity();
  report.oracle_seconds = std::numeric_limits<double>::infinity();
  for (int r = 0; r < report.repetitions; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    const CoeffStream a = run_family(spec, N);
    report.recurrence_seconds =
        std::min(report.recurrence_seconds, seconds_since(t0));
    t0 = std::chrono::steady_clock::now();
    const CoeffStream b = oracle_stream(id, f, N);
    report.oracle_seconds = std::min(report.oracle_seconds, seconds_since(t0));
    if (a.size() != b.size()) throw std::logic_error("bench: size mismatch");
  }
  report.ratio = report.oracle_seconds /
                 std::max(report.recurrence_seconds, 1e-12);
  return report;
}

Params draw_params(const FamilyInfo& info, std::uint64_t seed,
                   std::uint64_t trial) {
  Draw draw(seed, trial, catalogue_index(info.id));
  Params params;
  for (const std::string& name : info.arity) {
    if (name == "a") {
      params.a = draw.rational(12);
    } else if (name == "b") {
      params.b = draw.rational(12);
    } else if (name == "c") {
      Scalar c = draw.rational(12);
      while (is_nonpositive_integer(c) ||
             (info.excludes_c_two && c == Scalar::integer(2, Backend::kExact))) {
        c = draw.rational(12);
      }
      params.c = c;
    } else if (name == "p") {
      params.p = draw.bounded(2);
    } else if (name == "theta") {
      params.theta = draw.rational(12);
    }
  }
  return params;
}

std::vector<DeviationReport> sweep(std::uint64_t seed, int trials,
                                   std::int64_t N, Backend backend,
                                   double tolerance,
                                   const std::vector<FamilyId>& families,
                                   TableReading reading) {
  std::vector<const FamilyInfo*> chosen;
  for (const FamilyInfo& info : list_families()) {
    if (families.empty() ||
        std::find(families.begin(), families.end(), info.id) !=
            families.end()) {
      chosen.push_back(&info);
    }
  }
  std::vector<DeviationReport> reports;
  for (int t = 0; t < trials; ++t) {
    for (const FamilyInfo* info : chosen) {
      const Params params = draw_params(*info, seed, t);
      reports.push_back(
          compare_oracle(info->id, params, N, backend, tolerance, reading));
    }
  }
  return reports;
}

}  // namespace hypercoeff
