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

#include "hypercoeff/numerics.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace hypercoeff {

std::string_view to_string(Backend backend) {
  return backend == Backend::kExact ? "exact" : "f64";
}

Backend parse_backend(std::string_view text) {
  if (text == "exact") return Backend::kExact;
  if (text == "f64" || text == "float") return Backend::kF64;
  throw ParseError("unknown backend '" + std::string(text) +
                   "' (expected exact or f64)");
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long long value) : value_(static_cast<signed long>(value)) {
  static_assert(sizeof(long) == sizeof(long long));
}

Rational::Rational(long long num, long long den)
    : Rational(mpz_class(static_cast<signed long>(num)),
               mpz_class(static_cast<signed long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw DivisionByZeroError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  auto parse_int = [&](std::string_view digits) {
    std::string_view body = digits;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
      body.remove_prefix(1);
    }
    if (body.empty()) throw ParseError("malformed integer '" + std::string(digits) + "'");
    for (char ch : body) {
      if (ch < '0' || ch > '9') {
        throw ParseError("malformed integer '" + std::string(digits) + "'");
      }
    }
    std::string owned(digits.front() == '+' ? digits.substr(1) : digits);
    return mpz_class(owned, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), mpz_class(1));
  const mpz_class den = parse_int(text.substr(slash + 1));
  if (text.substr(slash + 1).front() == '-' || text.substr(slash + 1).front() == '+') {
    throw ParseError("denominator must be unsigned in '" + std::string(text) + "'");
  }
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

double Rational::to_double() const {
  // mpq_get_d truncates; compare the truncated value against its neighbour
  // away from zero and keep whichever is closer.
  const double truncated = value_.get_d();
  if (!std::isfinite(truncated)) return truncated;
  const double away = std::nextafter(
      truncated, sgn(value_) >= 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return truncated;
  const mpq_class err_trunc = abs(value_ - mpq_class(truncated));
  const mpq_class err_away = abs(value_ - mpq_class(away));
  if (err_away < err_trunc) return away;
  if (err_trunc < err_away) return truncated;
  // Tie: even mantissa.
  int exp = 0;
  const double mant = std::frexp(truncated, &exp);
  const auto bits = static_cast<long long>(std::ldexp(mant, 53));
  return (bits % 2 == 0) ? truncated : away;
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

// -------------------------------------------------------- GaussianRational

GaussianRational GaussianRational::reciprocal() const {
  if (is_zero()) throw DivisionByZeroError("Gaussian rational division by zero");
  if (im_.is_zero()) return {Rational(1) / re_, Rational(0)};
  const Rational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  // Real operands dominate in practice; skip the cross terms when possible.
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
  } else if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
  } else if (im_.is_zero()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
  } else {
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
  }
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZeroError("Gaussian rational division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    if (!im_.is_zero()) im_ /= o.re_;
    return *this;
  }
  return *this *= o.reciprocal();
}

// ---------------------------------------------------------------- PiLinear

PiLinear operator*(const PiLinear& x, const PiLinear& y) {
  if (x.has_pi() && y.has_pi()) {
    throw PiSquaredError("product of two pi-carrying values needs pi^2");
  }
  if (!x.has_pi()) return {x.q0_ * y.q0_, x.q0_ * y.q1_};
  return {x.q0_ * y.q0_, x.q1_ * y.q0_};
}

PiLinear operator/(const PiLinear& x, const PiLinear& y) {
  if (y.has_pi()) {
    throw PiSquaredError("division by a pi-carrying value is not representable");
  }
  return {x.q0_ / y.q0_, x.q1_ / y.q0_};
}

// --------------------------------------------------------------- Complex64

bool Complex64::is_finite() const {
  return std::isfinite(v_.real()) && std::isfinite(v_.imag());
}

// ------------------------------------------------------------------ Scalar

namespace {

Scalar demote(PiLinear v) {
  if (!v.has_pi()) return Scalar(v.q0());
  return Scalar(std::move(v));
}

[[noreturn]] void mismatch() {
  throw BackendMismatchError("arithmetic between exact and f64 scalars");
}

}  // namespace

Scalar::Scalar(PiLinear v) {
  if (v.has_pi()) {
    value_ = std::move(v);
  } else {
    value_ = v.q0();
  }
}

Scalar::Scalar(Complex64 v) : value_(v) {
  if (!v.is_finite()) throw NonFiniteError("non-finite f64 value");
}

Scalar Scalar::integer(long long value, Backend backend) {
  if (backend == Backend::kExact) return Scalar(GaussianRational(value));
  return Scalar(Complex64(static_cast<double>(value)));
}

Scalar Scalar::pi_times(const Scalar& q) {
  if (q.is_f64()) return Scalar(q.f64() * Complex64(std::numbers::pi));
  if (q.is_pi_linear()) {
    throw PiSquaredError("pi times a pi-carrying value needs pi^2");
  }
  return Scalar(PiLinear(GaussianRational(), q.gaussian()));
}

Scalar Scalar::imag_unit(Backend backend) {
  if (backend == Backend::kExact) return Scalar(GaussianRational::imag_unit());
  return Scalar(Complex64::imag_unit());
}

Backend Scalar::backend() const {
  return is_f64() ? Backend::kF64 : Backend::kExact;
}

const GaussianRational& Scalar::gaussian() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return *g;
  if (is_pi_linear()) {
    throw BackendCapabilityError("value carries a pi part: " + to_string(*this));
  }
  throw BackendMismatchError("expected an exact scalar, got f64 " + to_string(*this));
}

const Complex64& Scalar::f64() const {
  if (const auto* f = std::get_if<Complex64>(&value_)) return *f;
  throw BackendMismatchError("expected an f64 scalar, got exact " + to_string(*this));
}

PiLinear Scalar::as_pi_linear() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) {
    return PiLinear(*g, GaussianRational());
  }
  if (const auto* p = std::get_if<PiLinear>(&value_)) return *p;
  mismatch();
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, PiLinear>) {
          return v.q0().is_zero() && !v.has_pi();
        } else {
          return v.is_zero();
        }
      },
      value_);
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(-v); }, value_);
}

// Binary operations dispatch on the pair of alternatives.  Gaussian x
// Gaussian is the hot path of the exact backend, so it is tested first.
template <class GaussOp, class PiOp, class F64Op>
static Scalar binary(const Scalar& x, const Scalar& y, GaussOp gauss_op,
                     PiOp pi_op, F64Op f64_op) {
  if (x.is_gaussian() && y.is_gaussian()) {
    return Scalar(gauss_op(x.gaussian(), y.gaussian()));
  }
  if (x.is_f64() && y.is_f64()) return Scalar(f64_op(x.f64(), y.f64()));
  if (x.is_f64() || y.is_f64()) mismatch();
  return demote(pi_op(x.as_pi_linear(), y.as_pi_linear()));
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return a + b; },
                [](const auto& a, const auto& b) { return a + b; },
                [](const auto& a, const auto& b) { return a + b; });
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return a - b; },
                [](const auto& a, const auto& b) { return a - b; },
                [](const auto& a, const auto& b) { return a - b; });
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return a * b; },
                [](const auto& a, const auto& b) { return a * b; },
                [](const auto& a, const auto& b) { return a * b; });
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) throw DivisionByZeroError("scalar division by zero");
  return binary(x, y, [](const auto& a, const auto& b) { return a / b; },
                [](const auto& a, const auto& b) { return a / b; },
                [](const auto& a, const auto& b) { return a / b; });
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.backend() != y.backend()) return false;
  if (x.is_f64()) return x.f64() == y.f64();
  return x.as_pi_linear() == y.as_pi_linear();
}

// --------------------------------------------------------------- functions

Scalar pochhammer(const Scalar& x, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative index");
  Scalar result = Scalar::one(x.backend());
  Scalar term = x;
  const Scalar one = Scalar::one(x.backend());
  for (std::int64_t k = 0; k < n; ++k) {
    result *= term;
    term += one;
  }
  return result;
}

namespace {

bool is_decimal_token(std::string_view t) {
  return t.find_first_of(".eE") != std::string_view::npos ||
         t == "inf" || t == "nan";
}

// One signed real token: N, N/D or a decimal.
Scalar parse_real_token(std::string_view token, Backend backend,
                        std::string_view whole) {
  if (token.empty() || token == "+" || token == "-") {
    throw ParseError("malformed scalar '" + std::string(whole) +
                     "': empty numeric token");
  }
  if (is_decimal_token(token)) {
    if (backend == Backend::kExact) {
      throw BackendMismatchError("decimal token '" + std::string(token) +
                                 "' is not allowed under the exact backend");
    }
    double value = 0.0;
    std::string_view body = token;
    if (body.front() == '+') body.remove_prefix(1);
    const auto [ptr, ec] =
        std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc() || ptr != body.data() + body.size() ||
        !std::isfinite(value)) {
      throw ParseError("malformed decimal token '" + std::string(token) + "'");
    }
    return Scalar(Complex64(value));
  }
  Rational r;
  try {
    r = Rational::from_string(token);
  } catch (const ParseError&) {
    throw ParseError("malformed numeric token '" + std::string(token) +
                     "' in '" + std::string(whole) + "'");
  }
  if (backend == Backend::kExact) return Scalar(GaussianRational(r));
  return Scalar(Complex64(r.to_double()));
}

}  // namespace

Scalar parse_scalar(std::string_view text, Backend backend) {
  const std::string_view whole = text;
  if (text.empty()) throw ParseError("empty scalar text");
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      throw ParseError("whitespace in scalar '" + std::string(whole) + "'");
    }
  }
  if (text.back() != 'i') return parse_real_token(text, backend, whole);

  // Complex: split at the last sign that is not leading and does not belong
  // to an exponent.
  std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string_view re_text;
  std::string_view im_text = body;
  if (split != std::string_view::npos) {
    re_text = body.substr(0, split);
    im_text = body.substr(split);
  }
  // "i", "+i", "-i" carry an implicit unit magnitude.
  std::string im_owned(im_text);
  if (im_owned.empty() || im_owned == "+" || im_owned == "-") im_owned += "1";
  const Scalar im = parse_real_token(im_owned, backend, whole);
  const Scalar re = re_text.empty() ? Scalar::zero(backend)
                                    : parse_real_token(re_text, backend, whole);
  if (backend == Backend::kExact) {
    return Scalar(GaussianRational(re.gaussian().re(), im.gaussian().re()));
  }
  return Scalar(Complex64(re.f64().re(), im.f64().re()));
}

Complex64 approximate(const Scalar& x) {
  if (x.is_f64()) return x.f64();
  const PiLinear v = x.as_pi_linear();
  const double re = v.q0().re().to_double() +
                    v.q1().re().to_double() * std::numbers::pi;
  const double im = v.q0().im().to_double() +
                    v.q1().im().to_double() * std::numbers::pi;
  return Complex64(re, im);
}

Scalar to_f64(const Scalar& x) { return Scalar(approximate(x)); }

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string to_string(const GaussianRational& x) {
  if (x.im().is_zero()) return x.re().to_string();
  std::string im = x.im().to_string();
  if (im.front() != '-') im.insert(im.begin(), '+');
  if (x.re().is_zero()) {
    if (im.front() == '+') im.erase(im.begin());
    return im + "i";
  }
  return x.re().to_string() + im + "i";
}

std::string to_string(const Complex64& x) {
  if (x.im() == 0.0) return format_double(x.re());
  std::string im = format_double(x.im());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_double(x.re()) + im + "i";
}

std::string to_string(const Scalar& x) {
  if (x.is_f64()) return to_string(x.f64());
  if (x.is_gaussian()) return to_string(x.gaussian());
  const PiLinear v = x.as_pi_linear();
  return to_string(v.q0()) + "+(" + to_string(v.q1()) + ")*pi";
}

}  // namespace hypercoeff
