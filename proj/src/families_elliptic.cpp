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

// Recurrences for h(z) K(sqrt z) and h(z) E(sqrt z).
//
// The exp, binom and arctanexp tables list seeds with the pi/2 written
// outside the sum; they are multiplied back in here.  The trig/hyperbolic
// tables list rows only, so their seeds are the F seeds at
// (a,b,c) = (+-1/2, 1/2, 1), again times pi/2.  Since every recurrence is
// linear, scaling the seeds scales the whole stream.

#include <stdexcept>

#include "families_internal.hpp"

namespace hypercoeff::detail {

namespace {

template <class T>
std::vector<Scalar> half_pi_times(const std::vector<T>& seeds) {
  std::vector<Scalar> out;
  out.reserve(seeds.size());
  for (const T& s : seeds) out.push_back(with_pi(T(0), s / 2));
  return out;
}

template <class T>
TypedRecurrence<T> exp_elliptic(bool k, const T& p) {
  const T p2 = p * p;
  TypedRecurrence<T> r;
  r.order = 2;
  r.start = 2;
  if (k) {
    r.seeds = half_pi_times(std::vector<T>{
        T(1), (4 * p + 1) / 4, (32 * p2 + 16 * p + 9) / 64});
    r.row = [p, p2](std::int64_t n) {
      const T d = inv_sq<T>(n);
      return std::vector<T>{(2 * n + 1) * (2 * n + 4 * p + 1) * d / 4,
                            -p * (2 * n + p) * d, p2 * d};
    };
  } else {
    r.seeds = half_pi_times(std::vector<T>{
        T(1), (4 * p - 1) / 4, (32 * p2 - 16 * p - 3) / 64});
    r.row = [p, p2](std::int64_t n) {
      const T d = inv_sq<T>(n);
      return std::vector<T>{(2 * n + 1) * (2 * n + 4 * p - 1) * d / 4,
                            -p * (2 * n + p - 1) * d, p2 * d};
    };
  }
  return r;
}

template <class T>
TypedRecurrence<T> binom_elliptic(bool k, const T& p, const T& th) {
  const T p2 = p * p;
  const T th2 = th * th;
  TypedRecurrence<T> r;
  r.order = 2;
  r.start = 2;
  if (k) {
    r.seeds = half_pi_times(std::vector<T>{
        T(1), (1 - 4 * th * p) / 4,
        (32 * th2 * p2 - 32 * th2 * p - 16 * th * p + 9) / 64});
    r.row = [p, th, th2](std::int64_t n) {
      const T d = inv_sq<T>(n);
      const T a0 = (8 * th * n * (n - p) + (2 * n + 1) * (2 * n + 1) -
                    4 * th * p) /
                   4;
      const T a1 = -th *
                   (2 * (th + 2) * n * n - 4 * (th + 1) * n * (p + 1) +
                    2 * th * (p + 1) * (p + 1) + 1) /
                   2;
      const T e = -2 * n + 2 * p + 3;
      const T a2 = th2 * e * e / 4;
      return std::vector<T>{a0 * d, a1 * d, a2 * d};
    };
  } else {
    r.seeds = half_pi_times(std::vector<T>{
        T(1), -(4 * th * p + 1) / 4,
        (32 * th2 * p2 - 32 * th2 * p + 16 * th * p - 3) / 64});
    r.row = [p, th, th2](std::int64_t n) {
      const T d = inv_sq<T>(n);
      const T a0 = ((8 * th + 4) * n * n - 8 * th * n * p - 4 * th * p - 1) / 4;
      const T m = -n + p + 1;
      const T a1 =
          th * (-2 * th * m * m - (2 * n - 1) * (2 * n - 2 * p - 3)) / 2;
      const T a2 = th2 * (2 * n - 2 * p - 5) * (2 * n - 2 * p - 3) / 4;
      return std::vector<T>{a0 * d, a1 * d, a2 * d};
    };
  }
  return r;
}

template <class T>
TypedRecurrence<T> arctanexp_elliptic(bool k, const T& p) {
  const T p2 = p * p;
  const T p3 = p2 * p;
  const T p4 = p2 * p2;
  TypedRecurrence<T> r;
  r.order = 4;
  r.start = 4;
  if (k) {
    r.seeds = half_pi_times(std::vector<T>{
        T(1), (1 - 4 * p) / 4, (32 * p2 - 16 * p + 9) / 64,
        (-128 * p3 + 96 * p2 + 148 * p + 75) / 768,
        (2048 * p4 - 2048 * p3 - 12928 * p2 - 704 * p + 3675) / 49152});
    r.row = [p, p2](std::int64_t n) {
      const T d = inv_sq<T>(n);
      return std::vector<T>{
          (2 * n + 1) * (2 * n - 4 * p + 1) * d / 4,
          -(2 * n * n - 2 * n * (p + 2) + p2 + 2) * d,
          (4 * n * n - 4 * n * (p + 3) + 2 * p * (p + 5) + 9) * d / 2,
          -(n - 3) * (n - 2 * p - 3) * d,
          T((7 - 2 * n) * (7 - 2 * n)) * d / 4,
      };
    };
  } else {
    r.seeds = half_pi_times(std::vector<T>{
        T(1), (-4 * p - 1) / 4, (32 * p2 + 16 * p - 3) / 64,
        (-128 * p3 - 96 * p2 + 292 * p - 15) / 768,
        (2048 * p4 + 2048 * p3 - 17536 * p2 - 3136 * p - 525) / 49152});
    r.row = [p, p2](std::int64_t n) {
      const T d = inv_sq<T>(n);
      return std::vector<T>{
          (2 * n + 1) * (2 * n - 4 * p - 1) * d / 4,
          -(2 * n * n - 2 * n * (p + 2) + p2 + p + 2) * d,
          (4 * n * n - 4 * n * (p + 4) + 2 * p * (p + 5) + 15) * d / 2,
          -(n * n - 2 * n * (p + 3) + 7 * p + 9) * d,
          T((2 * n - 9) * (2 * n - 7)) * d / 4,
      };
    };
  }
  return r;
}

template <class T>
std::vector<T> sin_k_row(const T& p, std::int64_t n) {
  const T d0 = inv_sq<T>(n);
  const T d = inv_nsq<T>(n);
  const T p2 = p * p;
  const T p4 = p2 * p2;
  const T p6 = p4 * p2;
  const std::int64_t n2 = n * n;
  const T g0 = T(3 * (n - 1) * n + 1) * d0;
  const T g1 = (4 * n *
                    (2 * n * (8 * n * ((n - 8) * p2 - n + 5) + 172 * p2 - 79) -
                     392 * p2 + 145) +
                608 * p2 - 199) *
               d / 16;
  const T g2 = ((5 - 2 * n) * (5 - 2 * n) * (12 * (n - 4) * n + 49) -
                16 * (n * (4 * n * (4 * n2 - 46 * n + 191) - 1381) + 911) * p2) *
               d / 16;
  const std::int64_t q = 4 * n2 - 24 * n + 35;
  const T g3 = (-q * q + 16 * (8 * (n - 6) * n + 67) * p4 +
                4 * (8 * n * (3 * n * (4 * (n - 15) * n + 331) - 2405) + 17271) *
                    p2) *
               d / 16;
  const T g4 = p2 *
               (2 * n * (-8 * n * (n * (2 * n - 37) + 4 * p2 + 253) +
                         248 * p2 + 6089) -
                934 * p2 - 13627) *
               d / 2;
  const T g5 = p2 *
               (96 * n * (2 * n - 19) * p2 +
                8 * n * (2 * n * ((n - 22) * n + 179) - 1281) + 16 * p4 +
                4264 * p2 + 13627) *
               d / 4;
  const T g6 = -p4 * (8 * n * (4 * n - 45) + 16 * p2 + 999) * d;
  const T g7 = p4 * (8 * (n - 13) * n + 24 * p2 + 333) * d;
  const T g8 = -16 * p6 * d;
  const T g9 = 4 * p6 * d;
  return {g0, g1, g2, g3, g4, g5, g6, g7, g8, g9};
}

template <class T>
std::vector<T> sin_e_row(const T& p, std::int64_t n) {
  const T d0 = inv_sq<T>(n);
  const T d = inv_nsq<T>(n);
  const T p2 = p * p;
  const T p4 = p2 * p2;
  const T p6 = p4 * p2;
  const T g0 = T(n * (3 * n - 5) + 1) * d0;
  const T g1 =
      (4 * n *
           (4 * n * (n * (4 * (n - 8) * p2 - 3 * n + 16) + 86 * p2 - 29) -
            392 * p2 + 87) +
       608 * p2 - 99) *
      d / 16;
  const T g2 = ((3 - 2 * n) * (3 - 2 * n) * (2 * n - 7) * (2 * n - 5) -
                16 * (n * (8 * n * (2 * (n - 12) * n + 103) - 1523) + 1021) *
                    p2) *
               d / 16;
  const T g3 = p2 *
               (16 * n *
                    (6 * n * n * n - 96 * n * n + 2 * (n - 6) * p2 + 561 * n -
                     1426) +
                268 * p2 + 21305) *
               d / 4;
  const T g4 = p2 *
               (2 * n * (-8 * n * (2 * (n - 20) * n + 4 * p2 + 295) +
                         256 * p2 + 7615) -
                3 * (330 * p2 + 6049)) *
               d / 2;
  const T g5 = p2 *
               (8 * (24 * (n - 10) * n * p2 +
                     (n - 12) * n * (2 * (n - 12) * n + 139) + 2 * p4) +
                9 * (524 * p2 + 2145)) *
               d / 4;
  const T g6 = -p4 * (32 * (n - 12) * n + 16 * p2 + 1141) * d;
  const T g7 = 2 * p4 * (4 * (n - 14) * n + 3 * (4 * p2 + 65)) * d;
  const T g8 = -16 * p6 * d;
  const T g9 = 4 * p6 * d;
  return {g0, g1, g2, g3, g4, g5, g6, g7, g8, g9};
}

template <class T>
std::vector<T> sinh_k_row(const T& p, std::int64_t n) {
  const T d0 = inv_sq<T>(n);
  const T d = inv_nsq<T>(n);
  const T p2 = p * p;
  const T p4 = p2 * p2;
  const T p6 = p4 * p2;
  const std::int64_t n2 = n * n;
  const T e0 = T(3 * (n - 1) * n + 1) * d0;
  const T e1 = (4 * n *
                    (2 * n * (-8 * n * ((n - 8) * p2 + n - 5) - 172 * p2 - 79) +
                     392 * p2 + 145) -
                608 * p2 - 199) *
               d / 16;
  const T e2 = (16 * (n * (4 * n * (4 * n2 - 46 * n + 191) - 1381) + 911) * p2 +
                (12 * (n - 4) * n + 49) * (5 - 2 * n) * (5 - 2 * n)) *
               d / 16;
  const std::int64_t q = 4 * n2 - 24 * n + 35;
  const T e3 = -(q * q - 16 * (8 * (n - 6) * n + 67) * p4 +
                 4 * (8 * n * (3 * n * (4 * (n - 15) * n + 331) - 2405) +
                      17271) *
                     p2) *
               d / 16;
  const T e4 = p2 *
               (2 * n * (8 * n * (n * (2 * n - 37) - 4 * p2 + 253) + 248 * p2 -
                         6089) -
                934 * p2 + 13627) *
               d / 2;
  const T e5 = p2 *
               (96 * n * (2 * n - 19) * p2 -
                8 * n * (2 * n * ((n - 22) * n + 179) - 1281) - 16 * p4 +
                4264 * p2 - 13627) *
               d / 4;
  const T e6 = p4 * (8 * n * (45 - 4 * n) + 16 * p2 - 999) * d;
  const T e7 = p4 * (8 * (n - 13) * n - 24 * p2 + 333) * d;
  const T e8 = 16 * p6 * d;
  const T e9 = -4 * p6 * d;
  return {e0, e1, e2, e3, e4, e5, e6, e7, e8, e9};
}

template <class T>
std::vector<T> sinh_e_row(const T& p, std::int64_t n) {
  const T d0 = inv_sq<T>(n);
  const T d = inv_nsq<T>(n);
  const T p2 = p * p;
  const T p4 = p2 * p2;
  const T p6 = p4 * p2;
  const T e0 = T(n * (3 * n - 5) + 1) * d0;
  const T e1 = (4 * n *
                    (4 * n *
                         (-3 * n * n - 2 * (2 * (n - 8) * n + 43) * p2 +
                          16 * n - 29) +
                     392 * p2 + 87) -
                608 * p2 - 99) *
               d / 16;
  const T e2 =
      (16 * (n * (8 * n * (2 * (n - 12) * n + 103) - 1523) + 1021) * p2 +
       (2 * n - 7) * (2 * n - 5) * (3 - 2 * n) * (3 - 2 * n)) *
      d / 16;
  const T e3 = p2 *
               (16 * n *
                    (-6 * n * n * n + 96 * n * n + 2 * (n - 6) * p2 - 561 * n +
                     1426) +
                268 * p2 - 21305) *
               d / 4;
  const T e4 = p2 *
               (2 * n * (8 * n * (2 * (n - 20) * n - 4 * p2 + 295) + 256 * p2 -
                         7615) -
                990 * p2 + 18147) *
               d / 2;
  const T e5 = p2 *
               (192 * (n - 10) * n * p2 -
                8 * (n - 12) * n * (2 * (n - 12) * n + 139) - 16 * p4 +
                9 * (524 * p2 - 2145)) *
               d / 4;
  const T e6 = p4 * (-32 * (n - 12) * n + 16 * p2 - 1141) * d;
  const T e7 = 2 * p4 * (4 * (n - 14) * n - 12 * p2 + 195) * d;
  const T e8 = 16 * p6 * d;
  const T e9 = -4 * p6 * d;
  return {e0, e1, e2, e3, e4, e5, e6, e7, e8, e9};
}

template <class T>
TypedRecurrence<T> trig_elliptic(bool k, HKind h, const T& p) {
  const T a = k ? T(1) / 2 : T(-1) / 2;
  const T b = T(1) / 2;
  const T c = T(1);
  TypedRecurrence<T> r;
  r.order = 9;
  r.start = 9;
  r.seeds = half_pi_times(f_trig_seeds(h, a, b, c, p));
  const bool trig = h == HKind::kSin || h == HKind::kCos;
  if (trig && k) {
    r.row = [p](std::int64_t n) { return sin_k_row(p, n); };
  } else if (trig) {
    r.row = [p](std::int64_t n) { return sin_e_row(p, n); };
  } else if (k) {
    r.row = [p](std::int64_t n) { return sinh_k_row(p, n); };
  } else {
    r.row = [p](std::int64_t n) { return sinh_e_row(p, n); };
  }
  return r;
}

}  // namespace

template <class T>
RecurrenceSpec build_elliptic_typed(SeriesBase kind, HKind h,
                                    const Typed<T>& q, const SpecMeta& meta) {
  const bool k = kind == SeriesBase::kK;
  switch (h) {
    case HKind::kExp:
      return finish(exp_elliptic(k, q.p), meta);
    case HKind::kBinom:
      return finish(binom_elliptic(k, q.p, q.theta), meta);
    case HKind::kExpArctan:
      return finish(arctanexp_elliptic(k, q.p), meta);
    case HKind::kSin:
    case HKind::kCos:
    case HKind::kSinh:
    case HKind::kCosh:
      return finish(trig_elliptic(k, h, q.p), meta);
    default:
      throw std::logic_error("build_elliptic_typed: no elliptic table for kind");
  }
}

template RecurrenceSpec build_elliptic_typed<GaussianRational>(
    SeriesBase, HKind, const Typed<GaussianRational>&, const SpecMeta&);
template RecurrenceSpec build_elliptic_typed<Complex64>(
    SeriesBase, HKind, const Typed<Complex64>&, const SpecMeta&);

}  // namespace hypercoeff::detail
