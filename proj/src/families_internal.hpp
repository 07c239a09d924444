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

// Shared machinery for the family builders.  Coefficient tables are written
// once as templates over the field type T (GaussianRational for the exact
// backend, Complex64 for f64) and lifted into Scalars at the boundary.

#ifndef HYPERCOEFF_SRC_FAMILIES_INTERNAL_HPP_
#define HYPERCOEFF_SRC_FAMILIES_INTERNAL_HPP_

#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "hypercoeff/families.hpp"

namespace hypercoeff::detail {

template <class T>
struct Typed {
  T a, b, c, p, theta;
};

inline const GaussianRational& typed_value(const Scalar& s, GaussianRational*) {
  return s.gaussian();
}
inline const Complex64& typed_value(const Scalar& s, Complex64*) {
  return s.f64();
}

template <class T>
T typed(const std::optional<Scalar>& s) {
  if (!s) return T(0);
  return typed_value(*s, static_cast<T*>(nullptr));
}

template <class T>
Typed<T> typed_params(const Params& params) {
  return {typed<T>(params.a), typed<T>(params.b), typed<T>(params.c),
          typed<T>(params.p), typed<T>(params.theta)};
}

// q0 + q1*pi in the backend of T.
inline Scalar with_pi(const GaussianRational& q0, const GaussianRational& q1) {
  return Scalar(PiLinear(q0, q1));
}
inline Scalar with_pi(const Complex64& q0, const Complex64& q1) {
  return Scalar(q0 + q1 * Complex64(std::numbers::pi));
}

template <class T>
std::vector<Scalar> lift(const std::vector<T>& values) {
  std::vector<Scalar> out;
  out.reserve(values.size());
  for (const T& v : values) out.emplace_back(v);
  return out;
}

template <class T>
void require_nonzero(const T& value, std::int64_t n, const char* factor) {
  if (value.is_zero()) throw SingularIndexError(n, factor);
}

// 1 / ((n+1)(c+n))
template <class T>
T inv_d2(const T& c, std::int64_t n) {
  const T cn = c + n;
  require_nonzero(cn, n, "c+n");
  return T(1) / (T(n + 1) * cn);
}

// 1 / ((c-2) c (n+1) (c+n))
template <class T>
T inv_d4(const T& c, std::int64_t n) {
  const T cm2 = c - 2;
  const T cn = c + n;
  require_nonzero(cm2, n, "c-2");
  require_nonzero(c, n, "c");
  require_nonzero(cn, n, "c+n");
  return T(1) / (cm2 * c * T(n + 1) * cn);
}

// 1 / ((c-2) c n (n+1) (c+n-1) (c+n))
template <class T>
T inv_d6(const T& c, std::int64_t n) {
  const T cm2 = c - 2;
  const T cn1 = c + (n - 1);
  const T cn = c + n;
  require_nonzero(cm2, n, "c-2");
  require_nonzero(c, n, "c");
  if (n == 0) throw SingularIndexError(n, "n");
  require_nonzero(cn1, n, "c+n-1");
  require_nonzero(cn, n, "c+n");
  return T(1) / (cm2 * c * T(n) * T(n + 1) * cn1 * cn);
}

// 1 / (n+1)^2
template <class T>
T inv_sq(std::int64_t n) {
  return T(1) / T((n + 1) * (n + 1));
}

// 1 / (n^2 (n+1)^2)
template <class T>
T inv_nsq(std::int64_t n) {
  if (n == 0) throw SingularIndexError(n, "n");
  return T(1) / T(n * n * (n + 1) * (n + 1));
}

// R[k] = (a)_k / (c)_k, k = 0..K.
template <class T>
std::vector<T> kummer_ratios(const T& a, const T& c, int K) {
  std::vector<T> r(K + 1);
  r[0] = T(1);
  for (int k = 1; k <= K; ++k) r[k] = r[k - 1] * (a + (k - 1)) / (c + (k - 1));
  return r;
}

// R[k] = (a)_k (b)_k / (c)_k, k = 0..K.
template <class T>
std::vector<T> gauss_ratios(const T& a, const T& b, const T& c, int K) {
  std::vector<T> r(K + 1);
  r[0] = T(1);
  for (int k = 1; k <= K; ++k) {
    r[k] = r[k - 1] * (a + (k - 1)) * (b + (k - 1)) / (c + (k - 1));
  }
  return r;
}

// A typed recurrence before lifting into Scalars.
template <class T>
struct TypedRecurrence {
  int order = 0;
  int start = 0;
  std::vector<Scalar> seeds;
  std::function<std::vector<T>(std::int64_t)> row;
};

template <class T>
RecurrenceSpec finish(TypedRecurrence<T> typed, const SpecMeta& meta) {
  RecurrenceSpec spec;
  spec.order = typed.order;
  spec.start = typed.start;
  spec.seeds = std::move(typed.seeds);
  spec.row = [row = std::move(typed.row)](std::int64_t n) {
    return lift(row(n));
  };
  spec.meta = meta;
  return spec;
}

// Per-base builders, instantiated for GaussianRational and Complex64.
// Parameters are validated by the caller.
template <class T>
FamilySpec build_m_typed(HKind h, Formulation formulation, const Typed<T>& q,
                         const SpecMeta& meta);
template <class T>
FamilySpec build_f_typed(HKind h, Formulation formulation, const Typed<T>& q,
                         const SpecMeta& meta, TableReading reading);
template <class T>
RecurrenceSpec build_elliptic_typed(SeriesBase kind, HKind h,
                                    const Typed<T>& q, const SpecMeta& meta);

// Seeds u_0..u_9 of the single-recurrence sin/cos/sinh/cosh x F rows;
// shared with the elliptic trig/hyperbolic corollaries.
template <class T>
std::vector<T> f_trig_seeds(HKind h, const T& a, const T& b, const T& c,
                            const T& p);

}  // namespace hypercoeff::detail

#endif  // HYPERCOEFF_SRC_FAMILIES_INTERNAL_HPP_
