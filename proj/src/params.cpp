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

#include "hypercoeff/params.hpp"

#include <cmath>

namespace hypercoeff {

Backend Params::backend() const {
  std::optional<Backend> seen;
  for (const auto& [name, value] : named()) {
    if (seen && *seen != value.backend()) {
      throw BackendMismatchError("parameters mix exact and f64 values");
    }
    seen = value.backend();
  }
  return seen.value_or(Backend::kExact);
}

Params Params::to_f64() const {
  auto convert = [](const std::optional<Scalar>& v) -> std::optional<Scalar> {
    if (!v) return std::nullopt;
    return hypercoeff::to_f64(*v);
  };
  return Params{convert(a), convert(b), convert(c), convert(p), convert(theta)};
}

std::map<std::string, Scalar> Params::named() const {
  std::map<std::string, Scalar> out;
  if (a) out.emplace("a", *a);
  if (b) out.emplace("b", *b);
  if (c) out.emplace("c", *c);
  if (p) out.emplace("p", *p);
  if (theta) out.emplace("theta", *theta);
  return out;
}

Params make_params(Backend backend, std::string_view a, std::string_view b,
                   std::string_view c, std::string_view p,
                   std::string_view theta) {
  auto parse = [&](std::string_view text) -> std::optional<Scalar> {
    if (text.empty()) return std::nullopt;
    return parse_scalar(text, backend);
  };
  return Params{parse(a), parse(b), parse(c), parse(p), parse(theta)};
}

bool is_nonpositive_integer(const Scalar& c) {
  if (c.is_f64()) {
    const Complex64& v = c.f64();
    return v.im() == 0.0 && v.re() <= 0.0 && std::floor(v.re()) == v.re();
  }
  if (c.is_pi_linear()) return false;
  const GaussianRational& g = c.gaussian();
  return g.im().is_zero() && g.re().is_integer() && g.re().sign() <= 0;
}

}  // namespace hypercoeff
