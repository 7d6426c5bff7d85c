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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcluster {

using Integer = boost::multiprecision::cpp_int;

/// Laurent polynomial in q^{1/2} with integer coefficients.
///
/// Terms are keyed by the half-exponent k, so the key k stands for the
/// monomial q^{k/2}. The map never stores a zero coefficient; the zero
/// polynomial is the empty map, which makes structural equality coincide
/// with equality of polynomials.
///
/// Text form (used for golden tests and fixtures): terms in ascending
/// half-exponent, integer powers as `q^j` (`q` for j = 1), odd
/// half-exponents as `q^(k/2)`, unit coefficients elided, other
/// coefficients written `c*q^j`. Examples: `0`, `1 + q^2`,
/// `-q^(-1/2) + q^(3/2)`, `2*q^-1`.
class QLaurent {
 public:
  using TermMap = std::map<std::int64_t, Integer>;

  QLaurent() = default;
  QLaurent(int c) : QLaurent(Integer(c)) {}  // NOLINT: constants convert
  explicit QLaurent(const Integer& c);

  /// c * q^{half_exponent/2}
  static QLaurent monomial(std::int64_t half_exponent, const Integer& c = 1);
  /// q^exponent (integer power of q).
  static QLaurent q_pow(std::int64_t exponent);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(std::int64_t half_exponent) const;

  /// Smallest / largest half-exponent. Precondition: non-zero.
  std::int64_t min_half_exponent() const;
  std::int64_t max_half_exponent() const;

  QLaurent& operator+=(const QLaurent& rhs);
  QLaurent& operator-=(const QLaurent& rhs);
  QLaurent& operator*=(const QLaurent& rhs);

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent operator-() const;

  friend bool operator==(const QLaurent&, const QLaurent&) = default;

  /// Bar involution q^{1/2} -> q^{-1/2}.
  QLaurent bar() const;
  /// Multiply by q^{half_shift/2}.
  QLaurent shifted(std::int64_t half_shift) const;
  /// Substitute q^{1/2} -> q^{factor/2}, i.e. half-exponent k -> factor*k.
  /// A polynomial in q becomes the same polynomial in q^factor. factor may
  /// be negative (base inversion); it must not be zero.
  QLaurent substitute_base(std::int64_t factor) const;
  /// Sum of coefficients (value at q = 1).
  Integer value_at_one() const;

  std::string to_string() const;
  static QLaurent parse(std::string_view text);

 private:
  void add_term(std::int64_t half_exponent, const Integer& c);

  TermMap terms_;
};

inline QLaurent bar(const QLaurent& a) { return a.bar(); }

std::ostream& operator<<(std::ostream& os, const QLaurent& a);

}  // namespace qcluster
