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
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcluster/int_matrix.hpp"
#include "qcluster/qlaurent.hpp"

namespace qcluster {

/// Integer exponent vector e in Z^m, indexing the torus monomial X^e.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(std::size_t m) : entries_(m, 0) {}
  explicit ExpVec(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  ExpVec(std::initializer_list<std::int64_t> entries) : entries_(entries) {}

  /// scale * e_i in Z^m.
  static ExpVec unit(std::size_t m, std::size_t i, std::int64_t scale = 1);

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  ExpVec& operator+=(const ExpVec& rhs);
  ExpVec& operator-=(const ExpVec& rhs);
  friend ExpVec operator+(ExpVec a, const ExpVec& b) { return a += b; }
  friend ExpVec operator-(ExpVec a, const ExpVec& b) { return a -= b; }
  ExpVec operator-() const;
  ExpVec scaled(std::int64_t k) const;
  /// Componentwise [x]_+ = max(x, 0).
  ExpVec positive_part() const;
  std::int64_t total_degree() const;

  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;

  /// `[e1,...,em]`
  std::string to_string() const;

 private:
  std::vector<std::int64_t> entries_;
};

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Skew-symmetric integer form Lambda on Z^m. Copies share the matrix.
class SkewForm {
 public:
  /// Throws InvalidSeed if lambda is not square and skew-symmetric.
  explicit SkewForm(IntMatrix lambda);

  std::size_t dimension() const { return matrix_->rows(); }
  const IntMatrix& matrix() const { return *matrix_; }
  std::int64_t entry(std::size_t i, std::size_t j) const { return (*matrix_)(i, j); }

  /// Lambda(e, f) = e^T Lambda f (overflow-checked).
  std::int64_t pairing(const ExpVec& e, const ExpVec& f) const;

  /// Same matrix (identical storage or equal entries).
  friend bool operator==(const SkewForm& a, const SkewForm& b) {
    return a.matrix_ == b.matrix_ || *a.matrix_ == *b.matrix_;
  }

 private:
  std::shared_ptr<const IntMatrix> matrix_;
};

/// Element of the based quantum torus T(Lambda): a finite sum of
/// c_e X^e with X^e X^f = q^{Lambda(e,f)/2} X^{e+f}.
class TorusElem {
 public:
  using TermMap = std::map<ExpVec, QLaurent, GradedLexLess>;

  /// The zero element over form.
  explicit TorusElem(SkewForm form);

  static TorusElem monomial(const SkewForm& form, const ExpVec& e, const QLaurent& c = 1);
  static TorusElem one(const SkewForm& form);
  /// x_i^power (no twist: Lambda(e_i, e_i) = 0).
  static TorusElem generator(const SkewForm& form, std::size_t i, std::int64_t power = 1);
  static TorusElem scalar(const SkewForm& form, const QLaurent& c);

  const SkewForm& form() const { return form_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  QLaurent coefficient(const ExpVec& e) const;

  TorusElem& operator+=(const TorusElem& rhs);
  TorusElem& operator-=(const TorusElem& rhs);
  friend TorusElem operator+(TorusElem a, const TorusElem& b) { return a += b; }
  friend TorusElem operator-(TorusElem a, const TorusElem& b) { return a -= b; }
  friend TorusElem operator*(const TorusElem& a, const TorusElem& b);
  TorusElem& operator*=(const TorusElem& rhs) { return *this = *this * rhs; }
  TorusElem operator-() const;

  TorusElem scaled(const QLaurent& c) const;
  TorusElem pow(std::uint32_t t) const;
  /// Bar involution: bar applied to every coefficient. Anti-multiplicative.
  TorusElem bar() const;

  /// Equal forms and equal terms. Throws FormMismatch on different forms.
  friend bool operator==(const TorusElem& a, const TorusElem& b);

  /// `c1 * X^[..] + c2 * X^[..]`, graded-lex ascending; multi-term
  /// coefficients are parenthesised; zero renders as `0`.
  std::string to_string() const;
  static TorusElem parse(const SkewForm& form, std::string_view text);

 private:
  void accumulate(const ExpVec& e, const QLaurent& c);
  void require_same_form(const TorusElem& other, const char* op) const;

  SkewForm form_;
  TermMap terms_;
};

/// Ordered product of generator powers x_{order[0]}^{a[order[0]]} ...
/// x_{order[m-1]}^{a[order[m-1]]}. order must be a permutation of [0, m).
TorusElem ordered_product(const SkewForm& form, const ExpVec& a,
                          std::span<const std::size_t> order);

/// Product x_{i1}^{p1} x_{i2}^{p2} ... of generator powers, in the given
/// sequence (indices may repeat).
TorusElem ordered_monomial(const SkewForm& form,
                           std::span<const std::pair<std::size_t, std::int64_t>> factors);

/// The scalar s with x_1^{a_1} ... x_m^{a_m} = s * X^a, namely
/// q^{-1/2 sum_{l<k} a_k a_l lambda_{kl}}.
QLaurent natural_order_prefactor(const SkewForm& form, const ExpVec& a);

std::ostream& operator<<(std::ostream& os, const TorusElem& a);

}  // namespace qcluster
