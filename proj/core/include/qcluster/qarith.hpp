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

#pragma once

#include <cstdint>

#include "qcluster/qlaurent.hpp"

// q-integers, q-factorials and Gaussian binomials at base q^d.
//
// Every function builds the base-q polynomial and then substitutes
// q -> q^d, so there is one code path for all bases.
namespace qcluster {

/// [n]_{q^d} = 1 + q^d + ... + q^{(n-1)d}; zero for n = 0.
/// Throws RangeError unless n >= 0 and d >= 1.
QLaurent q_int(std::int64_t n, std::int64_t d = 1);

/// [n]_{q^d}! = [1][2]...[n]; 1 for n = 0.
QLaurent q_factorial(std::int64_t n, std::int64_t d = 1);

/// Gaussian binomial [n, r] at base q^d, computed by the Pascal recurrence
/// [n+1, r] = q^r [n, r] + [n, r-1]. Zero when r < 0 or r > n.
QLaurent q_binom(std::int64_t n, std::int64_t r, std::int64_t d = 1);

/// The same binomial from the factorial quotient [n]!/([r]![n-r]!).
/// Kept as an independent cross-check of q_binom; throws ArithmeticError if
/// the quotient is not exact.
QLaurent q_binom_by_factorials(std::int64_t n, std::int64_t r, std::int64_t d = 1);

/// Exact quotient num / den of Laurent polynomials. Throws ArithmeticError
/// if den does not divide num, RangeError if den is zero.
QLaurent divide_exact(const QLaurent& num, const QLaurent& den);

/// (q^d)^{twice_exponent / 2}, i.e. the monomial with half-exponent
/// d * twice_exponent. Convenient for the (q^{d_i})^{r(r-1)/2} style twists.
QLaurent base_power(std::int64_t d, std::int64_t twice_exponent);

}  // namespace qcluster
