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

#include "hypercoeff/series_oracle.hpp"

#include <complex>
#include <string>

namespace hypercoeff {

namespace {

constexpr std::pair<HKind, std::string_view> kHNames[] = {
    {HKind::kExp, "exp"},       {HKind::kSin, "sin"},
    {HKind::kCos, "cos"},       {HKind::kSinh, "sinh"},
    {HKind::kCosh, "cosh"},     {HKind::kArcsin, "arcsin"},
    {HKind::kArccos, "arccos"}, {HKind::kBinom, "binom"},
    {HKind::kExpArctan, "arctanexp"},
};

void require_length(std::int64_t N) {
  if (N < 0) throw std::invalid_argument("series length index must be >= 0");
}

void require_valid_c(const Scalar& c) {
  if (is_nonpositive_integer(c)) {
    throw ParameterDomainError("c = " + to_string(c) +
                               " violates -c not in {0, 1, 2, ...}");
  }
}

}  // namespace

std::string_view to_string(HKind kind) {
  for (const auto& [k, name] : kHNames) {
    if (k == kind) return name;
  }
  return "?";
}

HKind parse_hkind(std::string_view text) {
  for (const auto& [k, name] : kHNames) {
    if (name == text) return k;
  }
  throw ParseError("unknown elementary factor '" + std::string(text) + "'");
}

std::string_view to_string(SeriesBase base) {
  switch (base) {
    case SeriesBase::kM: return "M";
    case SeriesBase::kF: return "F";
    case SeriesBase::kK: return "K";
    case SeriesBase::kE: return "E";
    case SeriesBase::kElementary: return "elementary";
    case SeriesBase::kProduct: return "product";
  }
  return "?";
}

std::string_view to_string(Provenance provenance) {
  return provenance == Provenance::kOracle ? "oracle" : "recurrence";
}

Backend CoeffStream::backend() const {
  if (coeffs.empty()) return params.backend();
  return coeffs.front().backend();
}

CoeffStream kummer_series(const Scalar& a, const Scalar& c, std::int64_t N) {
  require_length(N);
  require_valid_c(c);
  CoeffStream out;
  out.base = SeriesBase::kM;
  out.params.a = a;
  out.params.c = c;
  out.coeffs.reserve(N + 1);
  Scalar term = Scalar::one(a.backend());
  for (std::int64_t n = 0; n <= N; ++n) {
    out.coeffs.push_back(term);
    const Scalar k = Scalar::integer(n, a.backend());
    term = term * (a + k) / ((c + k) * Scalar::integer(n + 1, a.backend()));
  }
  return out;
}

CoeffStream gauss_series(const Scalar& a, const Scalar& b, const Scalar& c,
                         std::int64_t N) {
  require_length(N);
  require_valid_c(c);
  CoeffStream out;
  out.base = SeriesBase::kF;
  out.params.a = a;
  out.params.b = b;
  out.params.c = c;
  out.coeffs.reserve(N + 1);
  Scalar term = Scalar::one(a.backend());
  for (std::int64_t n = 0; n <= N; ++n) {
    out.coeffs.push_back(term);
    const Scalar k = Scalar::integer(n, a.backend());
    term = term * (a + k) * (b + k) /
           ((c + k) * Scalar::integer(n + 1, a.backend()));
  }
  return out;
}

namespace {

// p^n / n!, n = 0..N.
std::vector<Scalar> exp_lattice(const Scalar& p, std::int64_t N) {
  std::vector<Scalar> out;
  out.reserve(N + 1);
  Scalar term = Scalar::one(p.backend());
  for (std::int64_t n = 0; n <= N; ++n) {
    out.push_back(term);
    term = term * p / Scalar::integer(n + 1, p.backend());
  }
  return out;
}

std::vector<Scalar> arcsin_coeffs(const Scalar& p, std::int64_t N) {
  const Backend be = p.backend();
  std::vector<Scalar> out(N + 1, Scalar::zero(be));
  // n = 2k+1: (2k)! / (4^k (k!)^2 (2k+1)) p^{2k+1}.  The central binomial
  // ratio (2k)!/(4^k (k!)^2) is advanced incrementally.
  Scalar ratio = Scalar::one(be);
  Scalar p_pow = p;
  const Scalar p2 = p * p;
  for (std::int64_t k = 0; 2 * k + 1 <= N; ++k) {
    out[2 * k + 1] = ratio * p_pow / Scalar::integer(2 * k + 1, be);
    ratio = ratio * Scalar::integer(2 * k + 1, be) /
            Scalar::integer(2 * k + 2, be);
    p_pow = p_pow * p2;
  }
  return out;
}

}  // namespace

CoeffStream elementary_series(const ElementaryKind& h, std::int64_t N) {
  require_length(N);
  const Backend be = h.p.backend();
  const Scalar& p = h.p;
  CoeffStream out;
  out.base = SeriesBase::kElementary;
  out.params.p = p;
  out.params.theta = h.theta;

  switch (h.kind) {
    case HKind::kExp:
      out.coeffs = exp_lattice(p, N);
      break;
    case HKind::kSin:
    case HKind::kCos:
    case HKind::kSinh:
    case HKind::kCosh: {
      const bool odd = h.kind == HKind::kSin || h.kind == HKind::kSinh;
      const bool alternating = h.kind == HKind::kSin || h.kind == HKind::kCos;
      out.coeffs = exp_lattice(p, N);
      for (std::int64_t n = 0; n <= N; ++n) {
        if ((n % 2 == 1) != odd) {
          out.coeffs[n] = Scalar::zero(be);
        } else if (alternating && (n / 2) % 2 == 1) {
          out.coeffs[n] = -out.coeffs[n];
        }
      }
      break;
    }
    case HKind::kBinom: {
      if (!h.theta) throw ParameterDomainError("binom requires theta");
      if (h.theta->backend() != be) {
        throw BackendMismatchError("binom: theta and p backends differ");
      }
      // (-theta)^n p (p-1) ... (p-n+1) / n!
      const Scalar minus_theta = -*h.theta;
      Scalar term = Scalar::one(be);
      out.coeffs.reserve(N + 1);
      for (std::int64_t n = 0; n <= N; ++n) {
        out.coeffs.push_back(term);
        term = term * minus_theta * (p - Scalar::integer(n, be)) /
               Scalar::integer(n + 1, be);
      }
      break;
    }
    case HKind::kArcsin:
      out.coeffs = arcsin_coeffs(p, N);
      break;
    case HKind::kArccos: {
      out.coeffs = arcsin_coeffs(p, N);
      for (auto& v : out.coeffs) v = -v;
      out.coeffs[0] =
          Scalar::pi_times(Scalar::one(be) / Scalar::integer(2, be));
      break;
    }
    case HKind::kExpArctan: {
      out.coeffs.assign(N + 1, Scalar::zero(be));
      out.coeffs[0] = Scalar::one(be);
      if (N >= 1) out.coeffs[1] = -p;
      for (std::int64_t n = 1; n + 1 <= N; ++n) {
        out.coeffs[n + 1] =
            (-p * out.coeffs[n] -
             Scalar::integer(n - 1, be) * out.coeffs[n - 1]) /
            Scalar::integer(n + 1, be);
      }
      break;
    }
  }
  return out;
}

CoeffStream cauchy_product(const CoeffStream& A, const CoeffStream& B) {
  if (A.size() != B.size()) {
    throw std::invalid_argument("cauchy_product: streams differ in length");
  }
  if (A.size() > 0 && A.backend() != B.backend()) {
    throw BackendMismatchError("cauchy_product: streams differ in backend");
  }
  const std::size_t len = A.size();
  CoeffStream out;
  out.base = SeriesBase::kProduct;
  out.provenance = Provenance::kOracle;
  out.params = A.params;
  out.coeffs.reserve(len);
  if (len == 0) return out;

  if (A.backend() == Backend::kF64) {
    // Same sum, without per-term variant dispatch.
    std::vector<std::complex<double>> a(len), b(len);
    for (std::size_t k = 0; k < len; ++k) {
      a[k] = A[k].f64().get();
      b[k] = B[k].f64().get();
    }
    for (std::size_t n = 0; n < len; ++n) {
      std::complex<double> acc;
      for (std::size_t k = 0; k <= n; ++k) acc += a[k] * b[n - k];
      out.coeffs.emplace_back(Complex64(acc));
    }
    return out;
  }

  for (std::size_t n = 0; n < len; ++n) {
    Scalar acc = Scalar::zero(Backend::kExact);
    for (std::size_t k = 0; k <= n; ++k) {
      if (A[k].is_zero() || B[n - k].is_zero()) continue;
      acc += A[k] * B[n - k];
    }
    out.coeffs.push_back(std::move(acc));
  }
  return out;
}

CoeffStream unit_stream(Backend backend, std::int64_t N) {
  require_length(N);
  CoeffStream out;
  out.base = SeriesBase::kElementary;
  out.coeffs.assign(N + 1, Scalar::zero(backend));
  out.coeffs[0] = Scalar::one(backend);
  return out;
}

CoeffStream scale(const CoeffStream& A, const Scalar& s) {
  CoeffStream out = A;
  for (auto& v : out.coeffs) v = v * s;
  return out;
}

}  // namespace hypercoeff
