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

// Scalar arithmetic shared by the whole library.
//
// Two backends exist.  The exact backend works over Gaussian rationals,
// optionally extended by a single power of pi (PiLinear); the f64 backend
// works over complex doubles.  The two never mix implicitly: converting an
// exact value to a float is explicit (approximate) and one-way.

#ifndef HYPERCOEFF_NUMERICS_HPP_
#define HYPERCOEFF_NUMERICS_HPP_

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "hypercoeff/errors.hpp"

namespace hypercoeff {

enum class Backend { kExact, kF64 };

std::string_view to_string(Backend backend);
Backend parse_backend(std::string_view text);

// Arbitrary-precision rational in canonical form: den > 0 and
// gcd(|num|, den) = 1 after every operation.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(runtime/explicit)
  Rational(long long num, long long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  static Rational from_string(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // Nearest double (ties to even).
  double to_double() const;
  // Canonical text: "N" when the denominator is 1, "N/D" otherwise.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
  friend bool operator==(const Rational& x, const Rational& y) {
    return x.value_ == y.value_;
  }
  friend bool operator<(const Rational& x, const Rational& y) {
    return x.value_ < y.value_;
  }

 private:
  mpq_class value_;
};

// re + im*i with rational parts.  A field: division is defined whenever
// re^2 + im^2 != 0.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long long value) : re_(value) {}  // NOLINT
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational imag_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational reciprocal() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational x,
                                    const GaussianRational& y) {
    return x += y;
  }
  friend GaussianRational operator-(GaussianRational x,
                                    const GaussianRational& y) {
    return x -= y;
  }
  friend GaussianRational operator*(GaussianRational x,
                                    const GaussianRational& y) {
    return x *= y;
  }
  friend GaussianRational operator/(GaussianRational x,
                                    const GaussianRational& y) {
    return x /= y;
  }
  friend bool operator==(const GaussianRational& x,
                         const GaussianRational& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

// q0 + q1*pi.  Only the pi-degree <= 1 subspace is representable; a product
// of two values that both carry pi throws PiSquaredError.
class PiLinear {
 public:
  PiLinear() = default;
  PiLinear(GaussianRational q0, GaussianRational q1)
      : q0_(std::move(q0)), q1_(std::move(q1)) {}

  const GaussianRational& q0() const { return q0_; }
  const GaussianRational& q1() const { return q1_; }
  bool has_pi() const { return !q1_.is_zero(); }

  PiLinear operator-() const { return {-q0_, -q1_}; }
  friend PiLinear operator+(const PiLinear& x, const PiLinear& y) {
    return {x.q0_ + y.q0_, x.q1_ + y.q1_};
  }
  friend PiLinear operator-(const PiLinear& x, const PiLinear& y) {
    return {x.q0_ - y.q0_, x.q1_ - y.q1_};
  }
  friend PiLinear operator*(const PiLinear& x, const PiLinear& y);
  // Division is only defined by a pi-free divisor.
  friend PiLinear operator/(const PiLinear& x, const PiLinear& y);
  friend bool operator==(const PiLinear& x, const PiLinear& y) {
    return x.q0_ == y.q0_ && x.q1_ == y.q1_;
  }

 private:
  GaussianRational q0_;
  GaussianRational q1_;
};

// Complex double.  Arithmetic follows std::complex; finiteness is enforced
// where a Complex64 enters a Scalar.
class Complex64 {
 public:
  constexpr Complex64() = default;
  constexpr Complex64(double re, double im = 0.0) : v_(re, im) {}  // NOLINT
  constexpr explicit Complex64(std::complex<double> v) : v_(v) {}

  static constexpr Complex64 imag_unit() { return {0.0, 1.0}; }

  double re() const { return v_.real(); }
  double im() const { return v_.imag(); }
  const std::complex<double>& get() const { return v_; }
  bool is_zero() const { return v_ == std::complex<double>(); }
  bool is_finite() const;
  double abs() const { return std::abs(v_); }

  Complex64 operator-() const { return Complex64(-v_); }
  Complex64& operator+=(const Complex64& o) { v_ += o.v_; return *this; }
  Complex64& operator-=(const Complex64& o) { v_ -= o.v_; return *this; }
  Complex64& operator*=(const Complex64& o) { v_ *= o.v_; return *this; }
  Complex64& operator/=(const Complex64& o) { v_ /= o.v_; return *this; }

  friend Complex64 operator+(Complex64 x, const Complex64& y) { return x += y; }
  friend Complex64 operator-(Complex64 x, const Complex64& y) { return x -= y; }
  friend Complex64 operator*(Complex64 x, const Complex64& y) { return x *= y; }
  friend Complex64 operator/(Complex64 x, const Complex64& y) { return x /= y; }
  friend bool operator==(const Complex64& x, const Complex64& y) {
    return x.v_ == y.v_;
  }

 private:
  std::complex<double> v_;
};

// A number tagged with its backend.  Exact values are stored as
// GaussianRational unless they carry a nonzero pi part, in which case they
// are PiLinear; results are demoted back whenever the pi part cancels.
class Scalar {
 public:
  Scalar() = default;
  Scalar(GaussianRational v) : value_(std::move(v)) {}  // NOLINT
  Scalar(Rational v) : value_(GaussianRational(std::move(v))) {}  // NOLINT
  Scalar(PiLinear v);  // NOLINT
  Scalar(Complex64 v);  // NOLINT

  static Scalar integer(long long value, Backend backend);
  static Scalar zero(Backend backend) { return integer(0, backend); }
  static Scalar one(Backend backend) { return integer(1, backend); }
  // pi * q: PiLinear in the exact backend, q*pi rounded in f64.
  static Scalar pi_times(const Scalar& q);
  static Scalar imag_unit(Backend backend);

  Backend backend() const;
  bool is_gaussian() const {
    return std::holds_alternative<GaussianRational>(value_);
  }
  bool is_pi_linear() const { return std::holds_alternative<PiLinear>(value_); }
  bool is_f64() const { return std::holds_alternative<Complex64>(value_); }

  const GaussianRational& gaussian() const;
  const Complex64& f64() const;
  // Exact values widened to q0 + q1*pi (q1 = 0 for Gaussian rationals).
  PiLinear as_pi_linear() const;

  bool is_zero() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  // Exact equality within a backend; values from different backends are
  // never equal.
  friend bool operator==(const Scalar& x, const Scalar& y);

 private:
  std::variant<GaussianRational, PiLinear, Complex64> value_;
};

// (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1.
Scalar pochhammer(const Scalar& x, std::int64_t n);

// Parses the scalar grammar: integer "N", rational "N/D", decimal (f64
// only) and complex "RE+IMi" / "RE-IMi" / "IMi", each part signed.
Scalar parse_scalar(std::string_view text, Backend backend);

// Exact values rounded to the nearest double, pi substituted at double
// precision.  Identity on f64 values.
Complex64 approximate(const Scalar& x);

// Converts an exact value to the f64 backend, leaving f64 values alone.
Scalar to_f64(const Scalar& x);

// Text form consistent with parse_scalar.  PiLinear values print as
// "Q0+(Q1)*pi".
std::string to_string(const Scalar& x);
std::string to_string(const GaussianRational& x);
std::string to_string(const Complex64& x);
std::string format_double(double value);

}  // namespace hypercoeff

#endif  // HYPERCOEFF_NUMERICS_HPP_
