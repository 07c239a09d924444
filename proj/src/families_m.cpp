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

// Recurrences for h(z) M(a,c;z).
//
// Tables are kept in the shape they are stated in, with one shorthand:
// R[k] = (a)_k / (c)_k, so a(a+1)(a+2)p / (6c(c+1)(c+2)) reads R[3]*p/6.

#include <stdexcept>

#include "families_internal.hpp"

namespace hypercoeff::detail {

namespace {

// u_{n+1} = beta_0 u_n + beta_1 u_{n-1} with
//   beta_0 = (a + s(c+2n) + n) / ((n+1)(c+n)),  beta_1 = b1 / ((n+1)(c+n)).
// Covers exp x M and both branches of every M combo.
template <class T>
TypedRecurrence<T> exp_type_branch(const T& a, const T& c, const T& s,
                                   const T& b1, const T& u1) {
  TypedRecurrence<T> r;
  r.order = 1;
  r.start = 1;
  r.seeds = lift(std::vector<T>{T(1), u1});
  r.row = [a, c, s, b1](std::int64_t n) {
    const T d = inv_d2(c, n);
    return std::vector<T>{(a + s * (c + 2 * n) + n) * d, b1 * d};
  };
  return r;
}

template <class T>
TypedRecurrence<T> binom_m(const T& a, const T& c, const T& p,
                           const T& th) {
  TypedRecurrence<T> r;
  r.order = 2;
  r.start = 2;
  const T u1 = a / c - th * p;
  const T u2 = ((a * a + a) / (c * c + c) - 2 * a * th * p / c +
                th * th * (p - 1) * p) /
               2;
  r.seeds = lift(std::vector<T>{T(1), u1, u2});
  r.row = [a, c, p, th](std::int64_t n) {
    const T d = inv_d2(c, n);
    const T b0 = a + 2 * th * n * (c + n - 1) - th * p * (c + 2 * n) + n;
    const T b1 = th * (-2 * a - th * (n - p - 1) * (c + n - p - 2) - 2 * n +
                       p + 2);
    const T b2 = th * th * (a + n - p - 2);
    return std::vector<T>{b0 * d, b1 * d, b2 * d};
  };
  return r;
}

template <class T>
TypedRecurrence<T> arctanexp_m(const T& a, const T& c, const T& p) {
  TypedRecurrence<T> r;
  r.order = 4;
  r.start = 4;
  const T p2 = p * p;
  const T u1 = a / c - p;
  const T u2 = ((a * a + a) / (c * c + c) - 2 * a * p / c + p2) / 2;
  const T u3 = (3 * a * p2 / c - 3 * a * (a + 1) * p / (c * (c + 1)) +
                a * (a + 1) * (a + 2) / (c * (c + 1) * (c + 2)) - p2 * p +
                2 * p) /
               6;
  const T u4 =
      (6 * a * (a + 1) * (c + 2) * (c + 3) * p2 -
       4 * a * (c + 1) * (c + 2) * (c + 3) * (p2 - 2) * p -
       4 * a * (a + 1) * (a + 2) * (c + 3) * p +
       a * (a + 1) * (a + 2) * (a + 3) +
       c * (c + 1) * (c + 2) * (c + 3) * (p2 - 8) * p2) /
      (24 * c * (c + 1) * (c + 2) * (c + 3));
  r.seeds = lift(std::vector<T>{T(1), u1, u2, u3, u4});
  r.row = [a, c, p, p2](std::int64_t n) {
    const T d = inv_d2(c, n);
    return std::vector<T>{
        (a - p * (c + 2 * n) + n) * d,
        (-2 * (n - 1) * (c + n - 2) - p2 + p) * d,
        (2 * (a + n - 2) - p * (c + 2 * n - 6)) * d,
        (p - (n - 3) * (c + n - 4)) * d,
        (a + n - 4) * d,
    };
  };
  return r;
}

// beta_0..beta_5 shared by sin x M and cos x M.
template <class T>
std::vector<T> sin_m_row(const T& a, const T& c, const T& p, std::int64_t n) {
  const T d5 = inv_d4(c, n);
  const T d6 = inv_d6(c, n);
  const T p2 = p * p;
  const T p4 = p2 * p2;
  const T a2 = a * a;
  const T c2 = c * c;

  const T b0 = 2 * (a * (c2 - 2 * c * n + c - 2 * (n - 2) * (n - 2)) +
                    c * (n - 1) * (2 * c + n - 5));
  const T b1 =
      -(n - 4) * (n - 3) * (n - 2) * (n - 1) * (4 * p2 + 1) +
      2 * (n - 3) * (n - 2) * (n - 1) * (4 * a - c * (4 * p2 + 3)) +
      (n - 2) * (n - 1) *
          (8 * a2 + a * (4 * c + 6) - 6 * c * ((c - 2) * p2 + c) + c) +
      2 * (n - 1) *
          (a2 * (4 * c - 2) - 3 * a * (c - 1) * c + c * (-c2 + c + 2) * p2) -
      (c - 2) * (a2 * (c + 2) - a * c + c2 * (c + 1) * p2);
  const T b2 =
      -2 * p2 * (c - 3) * (a * (3 * c + 8) - 2 * c2 + c - 32) +
      2 * p2 *
          (n * (-10 * a + c * (3 * c - 31) + 104) + 6 * (c - 6) * n * n +
           4 * n * n * n) -
      2 * (a + n - 3) *
          (2 * a2 - a * (c - 2 * n + 3) - (n - 2) * (2 * c + n - 4));
  const T b3 =
      -(p2 * (12 * a2 - 2 * a * (6 * c + 5) + c * (6 * c - 1)) +
        2 * (n - 3) * (a + c * (4 * p2 + 3) * p2) + (a - 1) * a +
        5 * (c - 2) * c * p4 +
        (n - 4) * (n - 3) * (8 * p4 + 6 * p2 + 1));
  const T b4 = 2 * p2 *
               (p2 * (-6 * a + 5 * c + 4 * (n - 4)) - 3 * a + 2 * c + n - 4);
  const T b5 = -p2 * (4 * p4 + 5 * p2 + 1);
  return {b0 * d5, b1 * d6, b2 * d6, b3 * d6, b4 * d6, b5 * d6};
}

// beta_0..beta_5 shared by sinh x M and cosh x M.
template <class T>
std::vector<T> sinh_m_row(const T& a, const T& c, const T& p,
                          std::int64_t n) {
  const T d5 = inv_d4(c, n);
  const T d6 = inv_d6(c, n);
  const T p2 = p * p;
  const T p4 = p2 * p2;
  const T a2 = a * a;
  const T c2 = c * c;

  const T b0 = 2 * (a * (c2 - 2 * c * n + c - 2 * (n - 2) * (n - 2)) +
                    c * (n - 1) * (2 * c + n - 5));
  const T b1 =
      (n - 4) * (n - 3) * (n - 2) * (n - 1) * (4 * p2 - 1) +
      2 * (n - 3) * (n - 2) * (n - 1) * (4 * a + c * (4 * p2 - 3)) +
      (n - 2) * (n - 1) *
          (8 * a2 + a * (4 * c + 6) + c * (6 * (c - 2) * p2 - 6 * c + 1)) +
      2 * (n - 1) *
          (a2 * (4 * c - 2) - 3 * a * (c - 1) * c +
           (c - 2) * c * (c + 1) * p2) +
      (c - 2) * (a2 * (-(c + 2)) + a * c + c2 * (c + 1) * p2);
  const T b2 =
      2 * p2 * ((c - 3) * (a * (3 * c + 8) - 2 * c2 + c - 32)) +
      2 * p2 *
          (n * (10 * a + c * (31 - 3 * c) - 104) - 6 * (c - 6) * n * n -
           4 * n * n * n) -
      2 * (a + n - 3) *
          (2 * a2 - a * (c - 2 * n + 3) - (n - 2) * (2 * c + n - 4));
  const T b3 =
      -(p2 * (-12 * a2 + 2 * a * (6 * c + 5) - 6 * c2 + c) +
        2 * (n - 3) * (a + c * (4 * p2 - 3) * p2) + (a - 1) * a +
        5 * (c - 2) * c * p4 +
        (n - 4) * (n - 3) * (8 * p4 - 6 * p2 + 1));
  const T b4 = 2 * p2 *
               (p2 * (-6 * a + 5 * c + 4 * (n - 4)) + 3 * a - 2 * c - n + 4);
  const T b5 = 4 * p4 * p2 - 5 * p4 + p2;
  return {b0 * d5, b1 * d6, b2 * d6, b3 * d6, b4 * d6, b5 * d6};
}

template <class T>
std::vector<T> trig_m_seeds(HKind h, const T& a, const T& c, const T& p) {
  const std::vector<T> R = kummer_ratios(a, c, 5);
  const T p2 = p * p;
  const T p3 = p2 * p;
  const T p4 = p2 * p2;
  const T p5 = p4 * p;
  switch (h) {
    case HKind::kSin:
      return {T(0),
              p,
              a * p / c,
              R[2] * p / 2 - p3 / 6,
              R[3] * p / 6 - a * p3 / (6 * c),
              -R[2] * p3 / 12 + R[4] * p / 24 + p5 / 120};
    case HKind::kCos:
      return {T(1),
              a / c,
              (R[2] - p2) / 2,
              a * ((a + 1) * (a + 2) / ((c + 1) * (c + 2)) - 3 * p2) /
                  (6 * c),
              (-6 * R[2] * p2 + R[4] + p4) / 24,
              a *
                  (-10 * (a + 1) * (a + 2) * p2 / ((c + 1) * (c + 2)) +
                   (a + 1) * (a + 2) * (a + 3) * (a + 4) /
                       ((c + 1) * (c + 2) * (c + 3) * (c + 4)) +
                   5 * p4) /
                  (120 * c)};
    case HKind::kSinh:
      return {T(0),
              p,
              a * p / c,
              R[2] * p / 2 + p3 / 6,
              a * p3 / (6 * c) + R[3] * p / 6,
              R[2] * p3 / 12 + R[4] * p / 24 + p5 / 120};
    case HKind::kCosh:
      return {T(1),
              a / c,
              R[2] / 2 + p2 / 2,
              a * p2 / (2 * c) + R[3] / 6,
              R[2] * p2 / 4 + R[4] / 24 + p4 / 24,
              a * p4 / (24 * c) + R[3] * p2 / 12 + R[5] / 120};
    default:
      throw std::logic_error("trig_m_seeds: not a trig/hyperbolic kind");
  }
}

template <class T>
TypedRecurrence<T> trig_m(HKind h, const T& a, const T& c, const T& p) {
  TypedRecurrence<T> r;
  r.order = 5;
  r.start = 5;
  r.seeds = lift(trig_m_seeds(h, a, c, p));
  if (h == HKind::kSin || h == HKind::kCos) {
    r.row = [a, c, p](std::int64_t n) { return sin_m_row(a, c, p, n); };
  } else {
    r.row = [a, c, p](std::int64_t n) { return sinh_m_row(a, c, p, n); };
  }
  return r;
}

// beta_0..beta_11 shared by arcsin x M and arccos x M.
template <class T>
std::vector<T> arcsin_m_row(const T& a, const T& c, const T& p,
                            std::int64_t n) {
  const T d5 = inv_d4(c, n);
  const T d6 = inv_d6(c, n);
  const T p2 = p * p;
  const T p4 = p2 * p2;
  const T p6 = p4 * p2;
  const T p8 = p4 * p4;
  const T a2 = a * a;
  const T a3 = a2 * a;
  const T c2 = c * c;
  const T c3 = c2 * c;

  const T b0 = 2 * a * (c2 - 2 * c * n + c - 2 * (n - 2) * (n - 2)) +
               (c - 2) * c * p2 * (c + 2 * n - 1) +
               2 * c * (n - 1) * (2 * c + n - 5);

  const T b1 =
      (n - 4) * (n - 3) * (n - 2) * (n - 1) *
          (4 * (c - 2) * c * p2 + p4 - 1) +
      2 * (n - 3) * (n - 2) * (n - 1) *
          (4 * a * (p2 + 1) +
           c * (2 * (2 * (c - 1) * c - 5) * p2 + p4 - 3)) +
      (n - 2) * (n - 1) *
          (8 * a2 +
           p2 * (6 * a * (2 * c + 1) + c * (c * (4 * (c - 1) * c - 17) + 3)) +
           4 * a * c + 6 * a - 6 * c2 + c) +
      (n - 1) * (a2 * (8 * c - 4) +
                 2 * a * c * (c * (p2 - 3) + p2 + 3) -
                 c * (c + 1) * p2 * (c * (p2 + 4) - 2 * (p2 + 3))) -
      a * (c - 2) * (a * (c + 2) + c * ((c + 1) * p2 - 1));

  const T b2 =
      -(4 * (n - 5) * (n - 4) * (n - 3) * (n - 2) * p2 *
            (-4 * a + 2 * c + p2) +
        2 * (n - 4) * (n - 3) * (n - 2) *
            (-p2 * (8 * a * (2 * c + 1) + 4 * c * (1 - 3 * c) + 1) +
             (c - 1) * (3 * c + 1) * p4 + p6 - 1) -
        (n - 3) * (n - 2) *
            (c * ((24 - 9 * (c - 1) * c) * p4 +
                  (8 * c * (1 - 2 * c) + 33) * p2 - 3 * p6 + 4) -
             2 * a * ((6 - 4 * c * (c + 1)) * p2 + 3 * p4 + 1)) +
        (n - 2) * (p2 * (8 * a2 + 4 * a * c * (2 * (c - 1) * c - 3) +
                         6 * a - 6 * c2 + c) +
                   p4 * (a * (6 * c - 2) +
                         c * (c * (c * (3 * c - 7) - 7) + 13)) +
                   2 * a * (4 * a - 3 * c + 2) + (c - 2) * c * p6) +
        a * (p2 * (a * (4 * c - 2) - 3 * (c - 1) * c) +
             2 * (a - 1) * (2 * a - c + 1) - (c - 2) * (c + 1) * p4));

  const T b3 =
      -(2 * (n - 6) * (n - 5) * (n - 4) * (n - 3) * p2 *
            (3 * (c - 2) * c * p2 + p4 - 2) +
        4 * (n - 5) * (n - 4) * (n - 3) * p2 *
            (p2 * (6 * a + 3 * c * ((c - 1) * c - 3) - 2) + 8 * a +
             (c - 1) * p4 - 6 * c) +
        (n - 4) * (n - 3) *
            (p2 * (32 * a2 + 8 * a * (2 * c + 3) + 4 * c * (1 - 6 * c) + 3) +
             p4 * (6 * a * (6 * c - 1) +
                   3 * (c - 3) * c * (2 * c * (c + 2) - 1) + 6) +
             (3 - 6 * c) * p6 - p8 + 1) +
        (n - 3) *
            (-2 * p2 * (a2 * (8 - 16 * c) + 12 * a * (c - 1) * c + a - 2 * c) -
             2 * p6 * (a + c3 - 6 * c) +
             3 * p4 * (2 * a * ((c - 3) * c + 1) +
                       c * (-4 * c2 + 6 * c + 7)) +
             2 * a - c * p8) +
        a * p2 * (-4 * a * (c2 - 3) + c * (4 * c - 5) - 2) +
        a * (p4 * (-5 * a + c * (c * (7 - 3 * c) + 6) - 11) + a -
             (c - 2) * p6 - 1));

  const T b4 =
      p2 *
      (4 * (n - 7) * (n - 6) * (n - 5) * (n - 4) * p2 *
           (-6 * a + 3 * c + 2 * p2) +
       2 * (n - 6) * (n - 5) * (n - 4) *
           (-3 * p2 * (a * (8 * c + 4) - 6 * c2 + 2 * c + 1) +
            (c * (3 * c + 2) + 6) * p4 + p6 - 4) +
       (n - 5) * (n - 4) *
           (-3 * p2 * (4 * a * (c2 + c - 3) + c * (-8 * c2 + 4 * c + 21)) +
            3 * p4 * (4 * a + c * (3 * (c - 1) * c - 2) - 2) +
            8 * (a - 2 * c) + (3 * c - 2) * p6) +
       (n - 4) *
           (3 * p2 * (8 * a2 + a * (4 * c * ((c - 1) * c - 1) - 2) +
                      c * (5 - 6 * c) + 1) +
            32 * a2 +
            p4 * (4 * a * (3 * c - 2) + (3 * c - 11) * c3 + 6 * c + 5) -
            24 * a * c + 16 * a + ((c - 4) * c - 1) * p6 + 1) -
       a * (-16 * a2 + p2 * (a * (26 - 12 * c) + c * (9 * c - 17) - 7)) -
       a * (8 * a * c + 8 * a + (2 * c2 - 13) * p4 - 8 * c + p6 + 7));

  const T b5 =
      (n - 8) * (n - 7) * (n - 6) * (n - 5) * p4 *
          (4 * (c - 2) * c * p2 + p4 - 6) +
      2 * (n - 7) * (n - 6) * (n - 5) * p4 *
          (2 * p2 * (6 * a + c * (2 * (c - 1) * c - 7) - 4) +
           6 * (4 * a - 3 * c) + (c - 2) * p4) -
      (n - 6) * (n - 5) * p2 *
          (-3 * p2 * (8 * a * c + 4 * a * (4 * a + 3) - 12 * c2 + 2 * c + 3) +
           p4 * (6 * a * (5 - 6 * c) +
                 c * (c * (35 - 4 * (c - 1) * c) - 9) + 12) +
           (6 * c + 5) * p6 - 4) +
      (n - 5) *
          (p8 * (-(2 * a + (c + 1) * (c2 - 2))) +
           2 * p6 * (a * (3 * (c - 7) * c - 2) +
                     c * (3 * c * (5 - 2 * c) + 4) + 1) +
           2 * p4 * (3 * a * (a * (8 * c - 4) - 6 * (c - 1) * c - 1) +
                     6 * c - 2) +
           8 * a * p2) -
      a * p2 *
          (p2 * (6 * (a - 1) * c2 - 12 * a + 3 * c + 10) +
           p4 * (10 * a + c * (c * (3 * c - 11) + 2) + 4) - 4 * a +
           (c - 4) * p6 + 4);

  const T b6 =
      p4 *
      (-4 * (n - 9) * (n - 8) * (n - 7) * (n - 6) * p2 *
           (-4 * a + 2 * c + p2) -
       2 * (n - 8) * (n - 7) * (n - 6) *
           (-p2 * (8 * a * (2 * c + 1) + 4 * c * (1 - 3 * c) + 3) +
            (c * (c + 2) + 7) * p4 - 6) -
       (n - 7) * (n - 6) *
           (3 * p4 * (2 * a + c * ((c - 1) * c + 4) - 2) -
            p2 * (4 * a * (2 * c * (c + 1) - 9) +
                  c * (8 * c * (1 - 2 * c) + 51)) +
            12 * (a - 2 * c)) -
       (n - 6) *
           (p2 * (24 * a2 + a * (4 * c * (2 * (c - 1) * c - 1) - 30) +
                  9 * c * (3 - 2 * c) - 2) +
            p4 * (6 * a * (c - 1) + c * (c * ((c - 5) * c + 5) - 7) - 3) +
            12 * a * (4 * a - 3 * c + 2) + 3) +
       a * (p2 * (a * (46 - 12 * c) + (c - 3) * (9 * c + 2)) +
            3 * (4 * a * (-2 * a + c + 1) - 4 * c + 3) +
            (c2 + c - 3) * p4));

  const T b7 =
      -((n - 10) * (n - 9) * (n - 8) * (n - 7) * p6 *
            ((c - 2) * c * p2 - 4) +
        2 * (n - 9) * (n - 8) * (n - 7) * p6 *
            (4 * a * (p2 + 4) + (c * ((c - 1) * c - 4) - 4) * p2 - 12 * c) +
        (n - 8) * (n - 7) * p4 *
            (p2 * (32 * a2 + 8 * a * (2 * c + 3) + 4 * c * (1 - 6 * c) + 9) +
             p4 * (6 * a * (2 * c - 3) + c * (c + 3) * ((c - 4) * c + 1) -
                   18) +
             6) +
        (n - 7) * (p8 * (2 * a * ((c - 11) * c - 5) +
                         c * (2 * (7 - 2 * c) * c - 7) + 2) +
                   2 * p6 * (a * (2 * c - 1) * (8 * a - 6 * c + 3) +
                             6 * c - 4) +
                   12 * a * p4) +
        a * p4 *
            (p2 * (-4 * (a - 1) * c2 + 4 * a + c) +
             p4 * (-(5 * a + (c - 3) * (c - 2) * c - 7)) + 6 * a -
             2 * (7 * p2 + 3)));

  const T b8 =
      p6 *
      (-2 * (n - 11) * (n - 10) * (n - 9) * (n - 8) * p2 * (2 * a - c) -
       2 * (n - 10) * (n - 9) * (n - 8) *
           (p2 * (a * (4 * c + 2) - 3 * c2 + c + 1) + 4) -
       (n - 9) * (n - 8) *
           (p2 * (2 * a * (c2 + c - 6) + c * (-4 * c2 + 2 * c + 15)) -
            8 * a + 16 * c) +
       (n - 8) * (32 * a2 +
                  p2 * (2 * a * (4 * a + (c - 1) * c2 - 9) +
                        c * (13 - 6 * c) - 5) -
                  24 * a * c + 16 * a + 3) -
       a * (p2 * (a * (22 - 4 * c) + c * (3 * c - 11)) +
            8 * a * (-2 * a + c + 1) - 8 * c + p2 + 5));

  const T n2 = T(n * n);
  const T n3 = T(n * n * n);
  const T b9 =
      -p6 *
      (p2 * (a * (c2 * (6 * n - 55) + c * (-4 * n2 + 70 * n - 307) -
                  8 * n3 + 234 * n2 - 2276 * n + 7368) +
             a2 * (c2 - 8 * c * (n - 9) - 8 * n2 + 156 * n - 756) +
             (n - 9) * (6 * c2 * (n - 10) + c * (6 * n2 - 127 * n + 666) +
                        n3 - 33 * n2 + 359 * n - 1286)) -
       4 * (a + n - 10) * (a + n - 9));

  const T b10 =
      p8 * (-4 * a3 + 2 * a2 * (c - 4 * n + 41) +
            a * (c * (6 * n - 62) - 2 * n2 + 38 * n - 179) +
            (n - 10) * (4 * c * (n - 11) + 2 * n2 - 46 * n + 263));

  const T b11 = -p8 * (a + n - 12) * (a + n - 11);

  return {b0 * d5, b1 * d6, b2 * d6, b3 * d6, b4 * d6,  b5 * d6,
          b6 * d6, b7 * d6, b8 * d6, b9 * d6, b10 * d6, b11 * d6};
}

template <class T>
TypedRecurrence<T> arcsin_m(const T& a, const T& c, const T& p) {
  const std::vector<T> R = kummer_ratios(a, c, 10);
  const T p2 = p * p;
  const T p3 = p2 * p;
  const T p5 = p3 * p2;
  const T p7 = p5 * p2;
  const T p9 = p7 * p2;
  const T p11 = p9 * p2;
  TypedRecurrence<T> r;
  r.order = 11;
  r.start = 11;
  r.seeds = lift(std::vector<T>{
      T(0),
      p,
      a * p / c,
      R[2] * p / 2 + p3 / 6,
      a * p3 / (6 * c) + R[3] * p / 6,
      R[2] * p3 / 12 + R[4] * p / 24 + 3 * p5 / 40,
      3 * a * p5 / (40 * c) + R[3] * p3 / 36 + R[5] * p / 120,
      3 * R[2] * p5 / 80 + R[4] * p3 / 144 + R[6] * p / 720 + 5 * p7 / 112,
      5 * a * p7 / (112 * c) + R[3] * p5 / 80 + R[5] * p3 / 720 +
          R[7] * p / 5040,
      5 * R[2] * p7 / 224 + R[4] * p5 / 320 + R[6] * p3 / 4320 +
          R[8] * p / 40320 + 35 * p9 / 1152,
      35 * a * p9 / (1152 * c) + 5 * R[3] * p7 / 672 + R[5] * p5 / 1600 +
          R[7] * p3 / 30240 + R[9] * p / 362880,
      35 * R[2] * p9 / 2304 + 5 * R[4] * p7 / 2688 + R[6] * p5 / 9600 +
          R[8] * p3 / 241920 + R[10] * p / 3628800 + 63 * p11 / 2816,
  });
  r.row = [a, c, p](std::int64_t n) { return arcsin_m_row(a, c, p, n); };
  return r;
}

template <class T>
TypedRecurrence<T> arccos_m(const T& a, const T& c, const T& p) {
  const std::vector<T> R = kummer_ratios(a, c, 11);
  const T p2 = p * p;
  const T p3 = p2 * p;
  const T p5 = p3 * p2;
  const T p7 = p5 * p2;
  const T p9 = p7 * p2;
  const T p11 = p9 * p2;
  // u_n = rational part + pi * coefficient.
  const std::vector<std::pair<T, T>> u = {
      {T(0), T(1) / 2},
      {-p, a / (2 * c)},
      {-a * p / c, R[2] / 4},
      {-R[2] * p / 2 - p3 / 6, R[3] / 12},
      {-a * p3 / (6 * c) - R[3] * p / 6, R[4] / 48},
      {-R[2] * p3 / 12 - R[4] * p / 24 - 3 * p5 / 40, R[5] / 240},
      {-3 * a * p5 / (40 * c) - R[3] * p3 / 36 - R[5] * p / 120,
       R[6] / 1440},
      {-3 * R[2] * p5 / 80 - R[4] * p3 / 144 - R[6] * p / 720 -
           5 * p7 / 112,
       R[7] / 10080},
      {-5 * a * p7 / (112 * c) - R[3] * p5 / 80 - R[5] * p3 / 720 -
           R[7] * p / 5040,
       R[8] / 80640},
      {-5 * R[2] * p7 / 224 - R[4] * p5 / 320 - R[6] * p3 / 4320 -
           R[8] * p / 40320 - 35 * p9 / 1152,
       R[9] / 725760},
      {-35 * a * p9 / (1152 * c) - 5 * R[3] * p7 / 672 - R[5] * p5 / 1600 -
           R[7] * p3 / 30240 - R[9] * p / 362880,
       R[10] / 7257600},
      {-35 * R[2] * p9 / 2304 - 5 * R[4] * p7 / 2688 - R[6] * p5 / 9600 -
           R[8] * p3 / 241920 - R[10] * p / 3628800 - 63 * p11 / 2816,
       R[11] / 79833600},
  };
  TypedRecurrence<T> r;
  r.order = 11;
  r.start = 11;
  for (const auto& [q0, q1] : u) r.seeds.push_back(with_pi(q0, q1));
  r.row = [a, c, p](std::int64_t n) { return arcsin_m_row(a, c, p, n); };
  return r;
}

template <class T>
ComboSpec m_combo(HKind h, const T& a, const T& c, const T& p,
                  const SpecMeta& meta) {
  const T i = T::imag_unit();
  ComboSpec combo;
  combo.meta = meta;
  SpecMeta branch = meta;
  branch.family = meta.family + "/u";
  if (h == HKind::kSinh || h == HKind::kCosh) {
    combo.left = finish(
        exp_type_branch(a, c, p, T(-p * (p + 1)), a / c + p), branch);
    branch.family = meta.family + "/v";
    combo.right = finish(
        exp_type_branch(a, c, T(-p), T(-(p - 1) * p), a / c - p), branch);
    combo.combiner =
        h == HKind::kSinh ? Combiner::kHalfDifference : Combiner::kHalfSum;
  } else {
    const T ip = i * p;
    combo.left = finish(
        exp_type_branch(a, c, ip, T(-(ip - p * p)), a / c + ip), branch);
    branch.family = meta.family + "/v";
    combo.right = finish(
        exp_type_branch(a, c, T(-ip), T(ip + p * p), a / c - ip), branch);
    combo.combiner = h == HKind::kSin ? Combiner::kHalfDifferenceOverI
                                      : Combiner::kHalfSum;
  }
  return combo;
}

}  // namespace

template <class T>
FamilySpec build_m_typed(HKind h, Formulation formulation, const Typed<T>& q,
                         const SpecMeta& meta) {
  const T& a = q.a;
  const T& c = q.c;
  const T& p = q.p;
  if (formulation == Formulation::kCombo) return m_combo(h, a, c, p, meta);
  switch (h) {
    case HKind::kExp:
      return finish(exp_type_branch(a, c, p, T(-p * (p + 1)), a / c + p),
                    meta);
    case HKind::kBinom:
      return finish(binom_m(a, c, p, q.theta), meta);
    case HKind::kExpArctan:
      return finish(arctanexp_m(a, c, p), meta);
    case HKind::kSin:
    case HKind::kCos:
    case HKind::kSinh:
    case HKind::kCosh:
      return finish(trig_m(h, a, c, p), meta);
    case HKind::kArcsin:
      return finish(arcsin_m(a, c, p), meta);
    case HKind::kArccos:
      return finish(arccos_m(a, c, p), meta);
  }
  throw std::logic_error("build_m_typed: unhandled kind");
}

template FamilySpec build_m_typed<GaussianRational>(
    HKind, Formulation, const Typed<GaussianRational>&, const SpecMeta&);
template FamilySpec build_m_typed<Complex64>(HKind, Formulation,
                                             const Typed<Complex64>&,
                                             const SpecMeta&);

}  // namespace hypercoeff::detail
