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

#include "qcluster/qlaurent.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

#include "qcluster/checked.hpp"
#include "qcluster/error.hpp"

namespace qcluster {

QLaurent::QLaurent(const Integer& c) {
  if (c != 0) terms_.emplace(0, c);
}

QLaurent QLaurent::monomial(std::int64_t half_exponent, const Integer& c) {
  QLaurent r;
  if (c != 0) r.terms_.emplace(half_exponent, c);
  return r;
}

QLaurent QLaurent::q_pow(std::int64_t exponent) {
  return monomial(checked::mul(2, exponent));
}

Integer QLaurent::coefficient(std::int64_t half_exponent) const {
  auto it = terms_.find(half_exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::int64_t QLaurent::min_half_exponent() const {
  if (terms_.empty()) throw RangeError("min_half_exponent of zero polynomial");
  return terms_.begin()->first;
}

std::int64_t QLaurent::max_half_exponent() const {
  if (terms_.empty()) throw RangeError("max_half_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void QLaurent::add_term(std::int64_t half_exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(half_exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QLaurent& QLaurent::operator+=(const QLaurent& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      r.add_term(checked::add(ka, kb), ca * cb);
    }
  }
  return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& rhs) {
  *this = *this * rhs;
  return *this;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

QLaurent QLaurent::bar() const {
  QLaurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(checked::neg(k), c);
  return r;
}

QLaurent QLaurent::shifted(std::int64_t half_shift) const {
  QLaurent r;
  for (const auto& [k, c] : terms_) {
    r.terms_.emplace_hint(r.terms_.end(), checked::add(k, half_shift), c);
  }
  return r;
}

QLaurent QLaurent::substitute_base(std::int64_t factor) const {
  if (factor == 0) throw RangeError("substitute_base: factor must be non-zero");
  QLaurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(checked::mul(k, factor), c);
  return r;
}

Integer QLaurent::value_at_one() const {
  Integer s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

namespace {

std::string monomial_text(std::int64_t k) {
  if (k == 0) return "";
  if (k % 2 != 0) return "q^(" + std::to_string(k) + "/2)";
  const std::int64_t j = k / 2;
  if (j == 1) return "q";
  return "q^" + std::to_string(j);
}

}  // namespace

std::string QLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(k);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char ch) {
    if (peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Integer read_unsigned() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::int64_t read_small_signed() {
    const bool negative = accept('-');
    const Integer v = read_unsigned();
    if (v > Integer(std::numeric_limits<std::int64_t>::max() / 4)) fail("exponent too large");
    const auto x = static_cast<std::int64_t>(v);
    return negative ? -x : x;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("QLaurent parse error at offset " + std::to_string(pos_) + ": " + what +
                     " in \"" + std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// Returns the half-exponent following 'q'.
std::int64_t parse_exponent(Cursor& cur) {
  if (!cur.accept('^')) return 2;
  if (cur.accept('(')) {
    const std::int64_t num = cur.read_small_signed();
    std::int64_t half = checked::mul(2, num);
    if (cur.accept('/')) {
      const std::int64_t den = cur.read_small_signed();
      if (den != 2) cur.fail("only /2 denominators are allowed");
      half = num;
    }
    cur.expect(')');
    return half;
  }
  return checked::mul(2, cur.read_small_signed());
}

}  // namespace

QLaurent QLaurent::parse(std::string_view text) {
  Cursor cur(text);
  QLaurent result;
  if (cur.done()) cur.fail("empty input");
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-' between terms");
    }
    first = false;
    Integer coeff = 1;
    bool have_coeff = false;
    if (cur.at_digit()) {
      coeff = cur.read_unsigned();
      have_coeff = true;
    }
    std::int64_t half = 0;
    if (have_coeff && cur.accept('*')) {
      if (cur.peek() != 'q') cur.fail("expected 'q' after '*'");
    }
    if (cur.accept('q')) {
      half = parse_exponent(cur);
    } else if (!have_coeff) {
      cur.fail("expected a coefficient or 'q'");
    }
    result.add_term(half, negative ? Integer(-coeff) : coeff);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const QLaurent& a) { return os << a.to_string(); }

}  // namespace qcluster
