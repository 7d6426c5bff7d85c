// Copyright 2026 The qcluster Authors
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

#include "qcluster/qarith.hpp"

#include <string>
#include <vector>

#include "qcluster/checked.hpp"
#include "qcluster/error.hpp"

namespace qcluster {

namespace {

void require_base(std::int64_t d, const char* op) {
  if (d < 1) {
    throw RangeError(std::string(op) + ": base exponent d must be >= 1, got " + std::to_string(d));
  }
}

}  // namespace

QLaurent base_power(std::int64_t d, std::int64_t twice_exponent) {
  return QLaurent::monomial(checked::mul(d, twice_exponent));
}

QLaurent q_int(std::int64_t n, std::int64_t d) {
  require_base(d, "q_int");
  if (n < 0) throw RangeError("q_int: n must be >= 0, got " + std::to_string(n));
  QLaurent r;
  for (std::int64_t i = 0; i < n; ++i) r += QLaurent::q_pow(i);
  return r.substitute_base(d);
}

QLaurent q_factorial(std::int64_t n, std::int64_t d) {
  require_base(d, "q_factorial");
  if (n < 0) throw RangeError("q_factorial: n must be >= 0, got " + std::to_string(n));
  QLaurent r = 1;
  for (std::int64_t i = 1; i <= n; ++i) r *= q_int(i, 1);
  return r.substitute_base(d);
}

QLaurent q_binom(std::int64_t n, std::int64_t r, std::int64_t d) {
  require_base(d, "q_binom");
  if (r < 0 || r > n) return {};
  // Row of Pascal's triangle at base q, only columns 0..r are needed.
  std::vector<QLaurent> row(static_cast<std::size_t>(r) + 1);
  row[0] = 1;
  for (std::int64_t m = 0; m < n; ++m) {
    // row holds [m, 0..r]; turn it into [m+1, 0..r] in place, right to left.
    const std::int64_t top = std::min(r, m + 1);
    for (std::int64_t c = top; c >= 1; --c) {
      auto& cell = row[static_cast<std::size_t>(c)];
      cell = cell.shifted(checked::mul(2, c)) + row[static_cast<std::size_t>(c - 1)];
    }
  }
  return row[static_cast<std::size_t>(r)].substitute_base(d);
}

QLaurent q_binom_by_factorials(std::int64_t n, std::int64_t r, std::int64_t d) {
  require_base(d, "q_binom_by_factorials");
  if (r < 0 || r > n) return {};
  const QLaurent den = q_factorial(r, 1) * q_factorial(n - r, 1);
  return divide_exact(q_factorial(n, 1), den).substitute_base(d);
}

QLaurent divide_exact(const QLaurent& num, const QLaurent& den) {
  if (den.is_zero()) throw RangeError("divide_exact: division by zero");
  const std::int64_t den_top = den.max_half_exponent();
  const std::int64_t den_span = checked::sub(den_top, den.min_half_exponent());
  const Integer& den_lead = den.terms().rbegin()->second;

  QLaurent rest = num;
  QLaurent quotient;
  while (!rest.is_zero()) {
    const std::int64_t top = rest.max_half_exponent();
    if (checked::sub(top, rest.min_half_exponent()) < den_span) {
      throw ArithmeticError("divide_exact: " + den.to_string() + " does not divide " +
                            num.to_string());
    }
    const Integer& lead = rest.terms().rbegin()->second;
    if (lead % den_lead != 0) {
      throw ArithmeticError("divide_exact: leading coefficient not divisible in " +
                            num.to_string() + " / " + den.to_string());
    }
    const QLaurent step = QLaurent::monomial(checked::sub(top, den_top), lead / den_lead);
    quotient += step;
    rest -= step * den;
  }
  return quotient;
}

}  // namespace qcluster
