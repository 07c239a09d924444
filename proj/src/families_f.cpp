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

// Recurrences for h(z) F(a,b;c;z).
//
// Shorthand: R[k] = (a)_k (b)_k / (c)_k.
//
// Three numerator lines of the order-10 tables (gamma_4, gamma_5 and
// delta_4) start without an operator.  They are read as "+", the reading a
// line break inside an aligned sum implies; nothing else is assumed.

#include <stdexcept>

#include "families_internal.hpp"

namespace hypercoeff::detail {

namespace {

// u_{n+1} = beta_0 u_n + beta_1 u_{n-1} + beta_2 u_{n-2} with
//   beta_0 = ((a+n)(b+n) + s(c+2n)) / D,
//   beta_1 = b1(n) / D,  beta_2 = b2 / D,  D = (n+1)(c+n).
template <class T, class B1>
TypedRecurrence<T> exp_type_branch(const T& a, const T& b, const T& c,
                                   const T& s, B1 b1, const T& b2,
                                   const T& u1, const T& u2) {
  TypedRecurrence<T> r;
  r.order = 2;
  r.start = 2;
  r.seeds = lift(std::vector<T>{T(1), u1, u2});
  r.row = [a, b, c, s, b1, b2](std::int64_t n) {
    const T d = inv_d2(c, n);
    return std::vector<T>{((a + n) * (b + n) + s * (c + 2 * n)) * d,
                          b1(n) * d, b2 * d};
  };
  return r;
}

template <class T>
TypedRecurrence<T> exp_f(const T& a, const T& b, const T& c, const T& p) {
  const T ab = a * b;
  const T u2 = a * (1 + a) * b * (1 + b) / (2 * c * (1 + c)) + ab * p / c +
               p * p / 2;
  return exp_type_branch(
      a, b, c, p,
      [a, b, p](std::int64_t n) -> T {
        return -p * (a + b + 2 * n + p - 1);
      },
      T(p * p), ab / c + p, u2);
}

template <class T>
ComboSpec f_combo(HKind h, const T& a, const T& b, const T& c, const T& p,
                  const SpecMeta& meta) {
  const T ab = a * b;
  const T R2 = a * (a + 1) * b * (b + 1) / (2 * c * (c + 1));
  const T p2 = p * p;
  ComboSpec combo;
  combo.meta = meta;
  SpecMeta left = meta;
  left.family = meta.family + "/u";
  SpecMeta right = meta;
  right.family = meta.family + "/v";
  if (h == HKind::kSinh || h == HKind::kCosh) {
    combo.left = finish(exp_f(a, b, c, p), left);
    combo.right = finish(
        exp_type_branch(
            a, b, c, T(-p),
            [a, b, p](std::int64_t n) -> T {
              return p * (a + b + 2 * n - p - 1);
            },
            p2, ab / c - p, R2 - ab * p / c + p2 / 2),
        right);
    combo.combiner =
        h == HKind::kSinh ? Combiner::kHalfDifference : Combiner::kHalfSum;
  } else {
    const T i = T::imag_unit();
    combo.left = finish(
        exp_type_branch(
            a, b, c, T(i * p),
            [a, b, p, i](std::int64_t n) -> T {
              return p * (p - i * (a + b + 2 * n - 1));
            },
            T(-p2), ab / c + i * p, i * ab * p / c + R2 - p2 / 2),
        left);
    combo.right = finish(
        exp_type_branch(
            a, b, c, T(-i * p),
            [a, b, p, i](std::int64_t n) -> T {
              return p * (p + i * (a + b + 2 * n - 1));
            },
            T(-p2), ab / c - i * p, -i * ab * p / c + R2 - p2 / 2),
        right);
    combo.combiner = h == HKind::kSin ? Combiner::kHalfDifferenceOverI
                                      : Combiner::kHalfSum;
  }
  return combo;
}

template <class T>
TypedRecurrence<T> binom_f(const T& a, const T& b, const T& c, const T& p,
                           const T& th) {
  TypedRecurrence<T> r;
  r.order = 2;
  r.start = 2;
  const T u1 = a * b / c - th * p;
  const T u2 = -a * b * th * p / c +
               a * (a + 1) * b * (b + 1) / (2 * c * (c + 1)) +
               th * th * (p - 1) * p / 2;
  r.seeds = lift(std::vector<T>{T(1), u1, u2});
  r.row = [a, b, c, p, th](std::int64_t n) {
    const T d = inv_d2(c, n);
    const T a0 = (a + n) * (b + n) + 2 * th * n * (c + n - 1) -
                 th * p * (c + 2 * n);
    const T a1 = th * (a * (p - 2 * (b + n - 1)) + b * (-2 * n + p + 2) +
                       (c - 2) * th -
                       (n - p) * (th * (c + n - p - 3) + 2 * n) + 4 * n - p -
                       2);
    const T a2 = th * th * (a + n - p - 2) * (b + n - p - 2);
    return std::vector<T>{a0 * d, a1 * d, a2 * d};
  };
  return r;
}

template <class T>
TypedRecurrence<T> arctanexp_f(const T& a, const T& b, const T& c,
                               const T& p) {
  const std::vector<T> R = gauss_ratios(a, b, c, 4);
  const T ab = a * b;
  const T p2 = p * p;
  TypedRecurrence<T> r;
  r.order = 4;
  r.start = 4;
  r.seeds = lift(std::vector<T>{
      T(1),
      ab / c - p,
      -ab * p / c + R[2] / 2 + p2 / 2,
      ab * p2 / (2 * c) - R[2] * p / 2 + R[3] / 6 + (p - p2 * p / 2) / 3,
      (6 * R[2] * p2 - 4 * ab * (p2 - 2) * p / c - 4 * R[3] * p + R[4] +
       p2 * p2 - 8 * p2) /
          24,
  });
  r.row = [a, b, c, p, p2](std::int64_t n) {
    const T d = inv_d2(c, n);
    return std::vector<T>{
        ((a + n) * (b + n) - p * (c + 2 * n)) * d,
        (p * (a + b + 2 * n - 1) - 2 * (n - 1) * (c + n - 2) - p2) * d,
        (2 * (a + n - 2) * (b + n - 2) - p * (c + 2 * n - 6) + p2) * d,
        (p * (a + b + 2 * n - 7) - (n - 3) * (c + n - 4)) * d,
        (a + n - 4) * (b + n - 4) * d,
    };
  };
  return r;
}

// gamma_0..gamma_9, shared by sin x F and cos x F.
template <class T>
std::vector<T> sin_f_row(const T& a, const T& b, const T& c, const T& p,
                         TableReading reading, std::int64_t n) {
  const T d5 = inv_d4(c, n);
  const T d6 = inv_d6(c, n);
  const T p2 = p * p;
  const T p4 = p2 * p2;
  const T p6 = p4 * p2;
  const T a2 = a * a;
  const T a3 = a2 * a;
  const T a4 = a2 * a2;
  const T b2 = b * b;
  const T b3 = b2 * b;
  const T b4 = b2 * b2;
  const T c2 = c * c;

  const T g0 = 2 * (n - 1) * (n - 1) * (a * (c - 2 * b) + c * (b + c - 3)) +
               4 * (c - 2) * (n - 1) * (c * (a + b) - a * b) +
               2 * a * b * (c - 2) * (c + 1);

  const T g1 =
      -(n - 4) * (n - 3) * (n - 2) * (n - 1) *
          (a2 + 4 * c * (a + b) - 10 * a * b + b2 + c2 - 6 * c + 4 * p2 - 1) +
      2 * (n - 3) * (n - 2) * (n - 1) *
          (a2 * (4 * b - 3 * c) +
           a * (2 * (b - 1) * c + 4 * b * (b + 3) - 3 * c2) -
           c * (b * (3 * b + 3 * c + 2) + c + 4 * p2 - 13)) +
      (n - 2) * (n - 1) *
          (a2 * (8 * b2 + b * (4 * c + 6) - 6 * c2 + c) +
           a * (-(10 * b + 7) * c2 + 4 * (b * (b + 3) + 3) * c +
                6 * b * (b + 1)) +
           c * (b2 * (1 - 6 * c) + b * (12 - 7 * c) - 6 * (c - 2) * p2 + c +
                11)) +
      2 * (n - 1) *
          (a2 * b * (b * (4 * c - 2) - 3 * (c - 1) * c) -
           a * b * c * (3 * b * (c - 1) + c - 5) +
           c * (-c2 + c + 2) * p2) -
      (c - 2) * (a2 * b * (b * (c + 2) - c) - a * b * (b + 1) * c +
                 c2 * (c + 1) * p2);

  const T g2 =
      2 *
      ((n - 5) * (n - 4) * (n - 3) * (n - 2) *
           (a2 + a * (c - 4 * b) + (b - 1) * (b + c + 1) + 8 * p2) +
       (n - 4) * (n - 3) * (n - 2) *
           (a3 + a2 * (-5 * b + 3 * c + 2) +
            a * (-5 * b2 + 2 * b * (c - 7) + 3 * c + 4 * p2 - 1) +
            (b + 3 * c + 1) * (b2 + b + 4 * p2 - 2)) -
       (n - 3) * (n - 2) *
           (a3 * (b - 2 * c) + a2 * (b * (10 * b + 9) - 4 * (b + 1) * c) +
            a * (b * (b + 1) * (b - 4 * c + 8) - 6 * c * p2 + 2 * c) +
            2 * c * (-b3 - 2 * b2 - 3 * p2 * (b + c - 3) + b + 2)) -
       (n - 2) * (a3 * b * (4 * b - 3 * c + 2) +
                  a2 * b * (2 * b + 1) * (2 * b - c) +
                  a * p2 * (10 * b - 3 * c2 + c) -
                  a * (b - 1) * b * (b * (3 * c - 2) + 4 * c - 2) +
                  c * p2 * (-3 * b * c + b - c2 + 9)) +
       (c + 1) * p2 * (c2 * (2 * a + 2 * b + 1) - 3 * (a + 1) * (b + 1) * c +
                       4 * a * b) -
       (a - 1) * a * (b - 1) * b *
           (-c * (a + b + 1) + 2 * a * b + a + b + 1));

  const T g3 =
      -((n - 6) * (n - 5) * (n - 4) * (n - 3) *
            ((a - b) * (a - b) + 24 * p2 - 1) +
        2 * (n - 5) * (n - 4) * (n - 3) *
            (a3 - a2 * (b - 2) - a * (b * (b + 4) - 12 * p2 + 1) + b3 +
             2 * b2 + 12 * p2 * (b + c + 1) - b - 2) +
        (n - 4) * (n - 3) *
            (a4 + a3 * (2 * b + 3) + a2 * (-3 * b * (2 * b + 1) + 6 * p2 + 1) +
             a * (12 * p2 * (b + 2 * c) + b * (b * (2 * b - 3) - 8) - 3) +
             6 * p2 * (b2 + 4 * b * c + (c - 6) * c - 1) +
             (b + 1) * (b + 1) * (b2 + b - 2) + 8 * p4) +
        2 * (n - 3) *
            (a4 * b - a3 * b2 - a2 * (b3 + b - 3 * c * p2) +
             a * b2 * (b2 - 1) +
             a * p2 * (b * (6 * c - 40) + c * (3 * c + 2)) +
             c * p2 * (b * (3 * b + 3 * c + 2) + c + 4 * p2 - 13)) +
        a4 * (b - 1) * b + a3 * b * (-2 * b2 + b + 1) +
        a2 * (b4 + b3 +
              p2 * (12 * b2 - 2 * b * (6 * c + 5) + c * (6 * c - 1)) -
              3 * b2 + b) +
        a * p2 *
            ((6 * b + 7) * c2 - 4 * (b * (3 * b + 2) + 3) * c +
             2 * b * (11 - 5 * b)) -
        a * (b - 1) * (b - 1) * b * (b + 1) +
        c * p2 *
            (b2 * (6 * c - 1) + b * (7 * c - 12) + 5 * (c - 2) * p2 - c -
             11));

  // The printed g4 and g5 numerators each end on a line with no leading
  // operator.  kAsPrinted reads it as "+"; kRegrouped lets the p^2 factor
  // span the whole numerator, matching delta_4 and delta_5 under p -> ip.
  const T g4_head =
      8 * (n - 7) * (n - 6) * (n - 5) * (n - 4) +
      4 * (n - 6) * (n - 5) * (n - 4) * (3 * (a + b + 1) + c) +
      2 * (n - 5) * (n - 4) * (3 * (a + b - 1) * (a + b + c + 1) + 8 * p2) +
      (n - 4) * (a3 + a2 * (3 * b + 3 * c + 2) +
                 a * (b * (3 * b + 6 * c - 46) + 3 * c + 4 * p2 - 1) +
                 (b + 3 * c + 1) * (b2 + b + 4 * p2 - 2));
  const T g4_tail =
      a3 * (2 * c - 3 * b) + a2 * (3 * b * (2 * b - 5) + 4 * c) -
      a * (p2 * (6 * b - 5 * c) - 4 * b * c + 3 * b * (b * (b + 5) - 4) +
           2 * c) +
      5 * c * p2 * (b + c - 3) + 2 * (b - 1) * (b + 1) * (b + 2) * c;
  const T g4 = reading == TableReading::kRegrouped
                   ? 2 * p2 * (g4_head + g4_tail)
                   : g4_head + 2 * p2 * g4_tail;

  const T g5_head =
      -4 * (n - 8) * (n - 7) * (n - 6) * (n - 5) -
      8 * (n - 7) * (n - 6) * (n - 5) * (a + b + 1) -
      6 * (n - 6) * (n - 5) * ((a + b) * (a + b) + 8 * p2 - 1) -
      2 * (n - 5) *
          (a3 + 3 * a2 * b + 2 * a2 + 3 * a * b2 + 12 * p2 * (a + b + c + 1) -
           16 * a * b - a + b3 + 2 * b2 - b - 2);
  const T g5_tail =
      -a4 + a3 * (2 * b - 3) - a2 * (b * (6 * b - 11) + 5 * p2 + 1) +
      a * (2 * p2 * (13 * b - 10 * c) + b * (b * (2 * b + 11) - 12) + 3) +
      (-5 * p2 * (b2 + 4 * b * c + (c - 6) * c - 1) -
       (b + 1) * (b + 1) * (b2 + b - 2) - 4 * p4);
  const T g5 = reading == TableReading::kRegrouped ? p2 * (g5_head + g5_tail)
                                                   : g5_head + p2 * g5_tail;

  const T g6 = 2 * p4 *
               (5 * a2 + a * (-8 * b + 5 * c + 12 * n - 72) + 5 * b2 +
                5 * b * c + 12 * b * (n - 6) + 4 * n * (c + 4 * n) - 29 * c -
                196 * n + 8 * p2 + 595);
  const T g7 = -p4 * (5 * a2 - 2 * a * (b - 4 * n + 28) + 5 * b2 +
                      8 * b * (n - 7) + 8 * (n - 14) * n + 24 * p2 + 387);
  const T g8 = 16 * p6;
  const T g9 = -4 * p6;
  return {g0 * d5, g1 * d6, g2 * d6, g3 * d6, g4 * d6,
          g5 * d6, g6 * d6, g7 * d6, g8 * d6, g9 * d6};
}

// delta_0..delta_9, shared by sinh x F and cosh x F.
template <class T>
std::vector<T> sinh_f_row(const T& a, const T& b, const T& c, const T& p,
                          std::int64_t n) {
  const T d5 = inv_d4(c, n);
  const T d6 = inv_d6(c, n);
  const T p2 = p * p;
  const T p4 = p2 * p2;
  const T p6 = p4 * p2;
  const T a2 = a * a;
  const T a3 = a2 * a;
  const T a4 = a2 * a2;
  const T b2 = b * b;
  const T b3 = b2 * b;
  const T b4 = b2 * b2;
  const T c2 = c * c;

  const T e0 = 2 * (n - 1) * (n - 1) * (a * (c - 2 * b) + c * (b + c - 3)) +
               4 * (c - 2) * (n - 1) * (c * (a + b) - a * b) +
               2 * a * b * (c - 2) * (c + 1);

  const T e1 =
      -(n - 4) * (n - 3) * (n - 2) * (n - 1) *
          (a2 + 4 * c * (a + b) - 10 * a * b + b2 + c2 - 6 * c - 4 * p2 - 1) +
      2 * (n - 3) * (n - 2) * (n - 1) *
          (a2 * (4 * b - 3 * c) +
           a * (2 * (b - 1) * c + 4 * b * (b + 3) - 3 * c2) -
           c * (b * (3 * b + 3 * c + 2) + c - 4 * p2 - 13)) +
      (n - 2) * (n - 1) *
          (a2 * (8 * b2 + b * (4 * c + 6) - 6 * c2 + c) +
           a * (-(10 * b + 7) * c2 + 4 * (b * (b + 3) + 3) * c +
                6 * b * (b + 1)) +
           c * (b2 * (1 - 6 * c) + b * (12 - 7 * c) + 6 * (c - 2) * p2 + c +
                11)) +
      (c - 2) * (a2 * b * (c - b * (c + 2)) + a * b * (b + 1) * c +
                 c2 * (c + 1) * p2) +
      2 * (n - 1) *
          (a2 * b * (b * (4 * c - 2) - 3 * (c - 1) * c) -
           a * b * c * (3 * b * (c - 1) + c - 5) +
           (c - 2) * c * (c + 1) * p2);

  const T e2 =
      2 *
      ((n - 5) * (n - 4) * (n - 3) * (n - 2) *
           (a2 + a * (c - 4 * b) + (b - 1) * (b + c + 1) - 8 * p2) +
       (n - 4) * (n - 3) * (n - 2) *
           (a3 + a2 * (-5 * b + 3 * c + 2) -
            a * (b * (5 * b - 2 * c + 14) - 3 * c + 4 * p2 + 1) +
            (b + 3 * c + 1) * (b2 + b - 4 * p2 - 2)) -
       (n - 3) * (n - 2) *
           (a3 * (b - 2 * c) + a2 * (b * (10 * b + 9) - 4 * (b + 1) * c) +
            a * (b * (b + 1) * (b - 4 * c + 8) + 6 * c * p2 + 2 * c) +
            2 * c * (-b3 - 2 * b2 + 3 * p2 * (b + c - 3) + b + 2)) -
       (n - 2) * (a3 * b * (4 * b - 3 * c + 2) +
                  a2 * b * (2 * b + 1) * (2 * b - c) -
                  a * (p2 * (10 * b - 3 * c2 + c) +
                       (b - 1) * b * (b * (3 * c - 2) + 4 * c - 2)) +
                  c * p2 * (b * (3 * c - 1) + c2 - 9)) -
       (c + 1) * p2 * (c2 * (2 * a + 2 * b + 1) - 3 * (a + 1) * (b + 1) * c +
                       4 * a * b) -
       (a - 1) * a * (b - 1) * b *
           (-c * (a + b + 1) + 2 * a * b + a + b + 1));

  const T e3 =
      -((n - 6) * (n - 5) * (n - 4) * (n - 3) *
            ((a - b) * (a - b) - 24 * p2 - 1) +
        2 * (n - 5) * (n - 4) * (n - 3) *
            (a3 - a2 * (b - 2) - a * (b * (b + 4) + 12 * p2 + 1) + b3 +
             2 * b2 - 12 * p2 * (b + c + 1) - b - 2) +
        (n - 4) * (n - 3) *
            (a4 + a3 * (2 * b + 3) - a2 * (6 * b2 + 3 * b + 6 * p2 - 1) +
             a * (-12 * p2 * (b + 2 * c) + b * (b * (2 * b - 3) - 8) - 3) -
             6 * p2 * (b2 + 4 * b * c + (c - 6) * c - 1) +
             (b + 1) * (b + 1) * (b2 + b - 2) + 8 * p4) +
        2 * (n - 3) *
            (-p2 * (c2 * (3 * a + 3 * b + 1) +
                    c * (a + b) * (3 * a + 3 * b + 2) - 40 * a * b - 13 * c) +
             a * b * (a - b - 1) * (a - b + 1) * (a + b) + 4 * c * p4) +
        a4 * (b - 1) * b + a3 * b * (-2 * b2 + b + 1) +
        a2 * (b4 + b3 +
              p2 * (-12 * b2 + 2 * b * (6 * c + 5) - 6 * c2 + c) -
              3 * b2 + b) +
        a * p2 *
            (-(6 * b + 7) * c2 + 4 * (b * (3 * b + 2) + 3) * c +
             2 * b * (5 * b - 11)) -
        a * (b - 1) * (b - 1) * b * (b + 1) +
        c * p2 *
            (b2 * (1 - 6 * c) + b * (12 - 7 * c) + 5 * (c - 2) * p2 + c +
             11));

  const T e4 =
      2 * p2 *
      (-8 * (n - 7) * (n - 6) * (n - 5) * (n - 4) -
       4 * (n - 6) * (n - 5) * (n - 4) * (3 * (a + b + 1) + c) +
       2 * (n - 5) * (n - 4) * (8 * p2 - 3 * (a + b - 1) * (a + b + c + 1)) +
       (n - 4) * (-a3 - a2 * (3 * b + 3 * c + 2) +
                  a * (b * (-3 * b - 6 * c + 46) - 3 * c + 4 * p2 + 1) -
                  (b + 3 * c + 1) * (b2 + b - 4 * p2 - 2)) +
       a3 * (3 * b - 2 * c) + a2 * (3 * (5 - 2 * b) * b - 4 * c) +
       a * (p2 * (5 * c - 6 * b) - 4 * b * c + 3 * b * (b * (b + 5) - 4) +
            2 * c) +
       5 * c * p2 * (b + c - 3) - 2 * (b - 1) * (b + 1) * (b + 2) * c);

  const T e5 =
      p2 *
      (4 * (n - 8) * (n - 7) * (n - 6) * (n - 5) +
       8 * (n - 7) * (n - 6) * (n - 5) * (a + b + 1) +
       6 * (n - 6) * (n - 5) * ((a + b) * (a + b) - 8 * p2 - 1) -
       2 * (n - 5) *
           (-a3 - 3 * a2 * b - 2 * a2 - 3 * a * b2 +
            12 * p2 * (a + b + c + 1) + 16 * a * b + a - b3 - 2 * b2 + b +
            2) +
       a4 + a3 * (3 - 2 * b) + a2 * (b * (6 * b - 11) - 5 * p2 + 1) -
       a * (2 * b3 + 11 * b2 - 2 * b * (13 * p2 + 6) + 20 * c * p2 + 3) -
       5 * p2 * (b2 + 4 * b * c + (c - 6) * c - 1) +
       (b + 1) * (b + 1) * (b2 + b - 2) + 4 * p4);

  const T e6 = 2 * p4 *
               (5 * a2 + a * (-8 * b + 5 * c + 12 * n - 72) + 5 * b2 +
                5 * b * c + 12 * b * (n - 6) + 4 * n * (c + 4 * n) - 29 * c -
                196 * n - 8 * p2 + 595);
  const T e7 = p4 * (-5 * a2 + 2 * a * (b - 4 * n + 28) - 5 * b2 -
                     8 * b * (n - 7) - 8 * (n - 14) * n + 24 * p2 - 387);
  const T e8 = -16 * p6;
  const T e9 = 4 * p6;
  return {e0 * d5, e1 * d6, e2 * d6, e3 * d6, e4 * d6,
          e5 * d6, e6 * d6, e7 * d6, e8 * d6, e9 * d6};
}

}  // namespace

template <class T>
std::vector<T> f_trig_seeds(HKind h, const T& a, const T& b, const T& c,
                            const T& p) {
  const std::vector<T> R = gauss_ratios(a, b, c, 9);
  const T ab = a * b;
  const T p2 = p * p;
  const T p3 = p2 * p;
  const T p4 = p2 * p2;
  const T p5 = p4 * p;
  const T p6 = p4 * p2;
  const T p7 = p6 * p;
  const T p8 = p4 * p4;
  const T p9 = p8 * p;
  switch (h) {
    case HKind::kSin:
      return {
          T(0),
          p,
          ab * p / c,
          R[2] * p / 2 - p3 / 6,
          R[3] * p / 6 - ab * p3 / (6 * c),
          -R[2] * p3 / 12 + R[4] * p / 24 + p5 / 120,
          ab * p5 / (120 * c) - R[3] * p3 / 36 + R[5] * p / 120,
          R[2] * p5 / 240 - R[4] * p3 / 144 + R[6] * p / 720 - p7 / 5040,
          -ab * p7 / (5040 * c) + R[3] * p5 / 720 - R[5] * p3 / 720 +
              R[7] * p / 5040,
          -R[2] * p7 / 10080 + R[4] * p5 / 2880 - R[6] * p3 / 4320 +
              R[8] * p / 40320 + p9 / 362880,
      };
    case HKind::kCos:
      return {
          T(1),
          ab / c,
          R[2] / 2 - p2 / 2,
          R[3] / 6 - ab * p2 / (2 * c),
          -R[2] * p2 / 4 + R[4] / 24 + p4 / 24,
          ab * p4 / (24 * c) - R[3] * p2 / 12 + R[5] / 120,
          R[2] * p4 / 48 - R[4] * p2 / 48 + R[6] / 720 - p6 / 720,
          -ab * p6 / (720 * c) + R[3] * p4 / 144 - R[5] * p2 / 240 +
              R[7] / 5040,
          -R[2] * p6 / 1440 + R[4] * p4 / 576 - R[6] * p2 / 1440 +
              R[8] / 40320 + p8 / 40320,
          ab * p8 / (40320 * c) - R[3] * p6 / 4320 + R[5] * p4 / 2880 -
              R[7] * p2 / 10080 + R[9] / 362880,
      };
    case HKind::kSinh:
      return {
          T(0),
          p,
          ab * p / c,
          R[2] * p / 2 + p3 / 6,
          ab * p3 / (6 * c) + R[3] * p / 6,
          R[2] * p3 / 12 + R[4] * p / 24 + p5 / 120,
          ab * p5 / (120 * c) + R[3] * p3 / 36 + R[5] * p / 120,
          R[2] * p5 / 240 + R[4] * p3 / 144 + R[6] * p / 720 + p7 / 5040,
          ab * p7 / (5040 * c) + R[3] * p5 / 720 + R[5] * p3 / 720 +
              R[7] * p / 5040,
          R[2] * p7 / 10080 + R[4] * p5 / 2880 + R[6] * p3 / 4320 +
              R[8] * p / 40320 + p9 / 362880,
      };
    case HKind::kCosh:
      return {
          T(1),
          ab / c,
          R[2] / 2 + p2 / 2,
          ab * p2 / (2 * c) + R[3] / 6,
          R[2] * p2 / 4 + R[4] / 24 + p4 / 24,
          ab * p4 / (24 * c) + R[3] * p2 / 12 + R[5] / 120,
          R[2] * p4 / 48 + R[4] * p2 / 48 + R[6] / 720 + p6 / 720,
          ab * p6 / (720 * c) + R[3] * p4 / 144 + R[5] * p2 / 240 +
              R[7] / 5040,
          R[2] * p6 / 1440 + R[4] * p4 / 576 + R[6] * p2 / 1440 +
              R[8] / 40320 + p8 / 40320,
          ab * p8 / (40320 * c) + R[3] * p6 / 4320 + R[5] * p4 / 2880 +
              R[7] * p2 / 10080 + R[9] / 362880,
      };
    default:
      throw std::logic_error("f_trig_seeds: not a trig/hyperbolic kind");
  }
}

template <class T>
FamilySpec build_f_typed(HKind h, Formulation formulation, const Typed<T>& q,
                         const SpecMeta& meta, TableReading reading) {
  const T& a = q.a;
  const T& b = q.b;
  const T& c = q.c;
  const T& p = q.p;
  if (formulation == Formulation::kCombo) {
    return f_combo(h, a, b, c, p, meta);
  }
  switch (h) {
    case HKind::kExp:
      return finish(exp_f(a, b, c, p), meta);
    case HKind::kBinom:
      return finish(binom_f(a, b, c, p, q.theta), meta);
    case HKind::kExpArctan:
      return finish(arctanexp_f(a, b, c, p), meta);
    case HKind::kSin:
    case HKind::kCos:
    case HKind::kSinh:
    case HKind::kCosh: {
      TypedRecurrence<T> r;
      r.order = 9;
      r.start = 9;
      r.seeds = lift(f_trig_seeds(h, a, b, c, p));
      if (h == HKind::kSin || h == HKind::kCos) {
        r.row = [a, b, c, p, reading](std::int64_t n) {
          return sin_f_row(a, b, c, p, reading, n);
        };
      } else {
        r.row = [a, b, c, p](std::int64_t n) {
          return sinh_f_row(a, b, c, p, n);
        };
      }
      return finish(std::move(r), meta);
    }
    default:
      throw std::logic_error("build_f_typed: no F table for this kind");
  }
}

template std::vector<GaussianRational> f_trig_seeds<GaussianRational>(
    HKind, const GaussianRational&, const GaussianRational&,
    const GaussianRational&, const GaussianRational&);
template std::vector<Complex64> f_trig_seeds<Complex64>(HKind,
                                                        const Complex64&,
                                                        const Complex64&,
                                                        const Complex64&,
                                                        const Complex64&);
template FamilySpec build_f_typed<GaussianRational>(
    HKind, Formulation, const Typed<GaussianRational>&, const SpecMeta&,
    TableReading);
template FamilySpec build_f_typed<Complex64>(HKind, Formulation,
                                             const Typed<Complex64>&,
                                             const SpecMeta&, TableReading);

}  // namespace hypercoeff::detail
