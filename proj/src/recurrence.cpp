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

#include "hypercoeff/recurrence.hpp"

#include <stdexcept>

namespace hypercoeff {

namespace {

void validate(const RecurrenceSpec& spec) {
  if (spec.order < 0) throw std::invalid_argument("recurrence order must be >= 0");
  if (spec.start < spec.order) {
    throw std::invalid_argument("recurrence start index " +
                                std::to_string(spec.start) +
                                " is below its order " +
                                std::to_string(spec.order));
  }
  if (spec.seeds.size() != static_cast<std::size_t>(spec.start) + 1) {
    throw std::invalid_argument("recurrence needs " +
                                std::to_string(spec.start + 1) + " seeds, got " +
                                std::to_string(spec.seeds.size()));
  }
  if (!spec.row) throw std::invalid_argument("recurrence has no row function");
}

}  // namespace

CoeffStream run(const RecurrenceSpec& spec, std::int64_t N, RunStats* stats) {
  if (N < 0) throw std::invalid_argument("run: N must be >= 0");
  validate(spec);

  CoeffStream out;
  out.base = spec.meta.base;
  out.provenance = Provenance::kRecurrence;
  out.params = spec.meta.params;
  out.coeffs.reserve(N + 1);

  const std::int64_t n0 = spec.start;
  const std::size_t width = static_cast<std::size_t>(spec.order) + 1;
  for (std::int64_t n = 0; n <= std::min(N, n0); ++n) {
    out.coeffs.push_back(spec.seeds[n]);
  }
  if (N <= n0) return out;

  // Ring buffer of the last k+1 values: window[(n - i) % width] = u_{n-i}.
  std::vector<Scalar> window(width);
  for (std::int64_t j = n0 - spec.order; j <= n0; ++j) {
    window[j % width] = spec.seeds[j];
  }

  for (std::int64_t n = n0; n < N; ++n) {
    try {
      const std::vector<Scalar> beta = spec.row(n);
      if (beta.size() != width) {
        throw std::logic_error("row function returned " +
                               std::to_string(beta.size()) +
                               " coefficients, expected " +
                               std::to_string(width));
      }
      Scalar next = beta[0] * window[n % width];
      for (std::size_t i = 1; i < width; ++i) {
        next += beta[i] * window[(n - i) % width];
      }
      if (stats) {
        ++stats->steps;
        stats->multiplications += width;
      }
      window[(n + 1) % width] = next;
      out.coeffs.push_back(std::move(next));
    } catch (const NonFiniteError&) {
      throw NonFiniteError("non-finite value while computing u_" +
                           std::to_string(n + 1) + " (step n = " +
                           std::to_string(n) + ")");
    } catch (const DivisionByZeroError& e) {
      throw SingularIndexError(n, std::string("division by zero: ") + e.what());
    }
  }
  return out;
}

CoeffStream run_combo(const ComboSpec& spec, std::int64_t N, RunStats* stats) {
  const CoeffStream u = run(spec.left, N, stats);
  const CoeffStream v = run(spec.right, N, stats);
  const Backend be = u.backend();
  const Scalar two = Scalar::integer(2, be);
  const Scalar two_i = two * Scalar::imag_unit(be);

  CoeffStream out;
  out.base = spec.meta.base;
  out.provenance = Provenance::kRecurrence;
  out.params = spec.meta.params;
  out.coeffs.reserve(u.size());
  for (std::size_t n = 0; n < u.size(); ++n) {
    switch (spec.combiner) {
      case Combiner::kHalfDifference:
        out.coeffs.push_back((u[n] - v[n]) / two);
        break;
      case Combiner::kHalfSum:
        out.coeffs.push_back((u[n] + v[n]) / two);
        break;
      case Combiner::kHalfDifferenceOverI:
        out.coeffs.push_back((u[n] - v[n]) / two_i);
        break;
    }
  }
  return out;
}

}  // namespace hypercoeff
