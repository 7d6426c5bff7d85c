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

#include "qcluster/torus.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

#include "qcluster/checked.hpp"
#include "qcluster/error.hpp"

namespace qcluster {

// ExpVec

ExpVec ExpVec::unit(std::size_t m, std::size_t i, std::int64_t scale) {
  if (i >= m) throw DimensionError("ExpVec::unit: index out of range");
  ExpVec e(m);
  e.entries_[i] = scale;
  return e;
}

ExpVec& ExpVec::operator+=(const ExpVec& rhs) {
  if (rhs.size() != size()) throw DimensionError("ExpVec length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] = checked::add(entries_[i], rhs.entries_[i]);
  return *this;
}

ExpVec& ExpVec::operator-=(const ExpVec& rhs) {
  if (rhs.size() != size()) throw DimensionError("ExpVec length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] = checked::sub(entries_[i], rhs.entries_[i]);
  return *this;
}

ExpVec ExpVec::operator-() const { return scaled(-1); }

ExpVec ExpVec::scaled(std::int64_t k) const {
  ExpVec r = *this;
  for (auto& x : r.entries_) x = checked::mul(x, k);
  return r;
}

ExpVec ExpVec::positive_part() const {
  ExpVec r = *this;
  for (auto& x : r.entries_) x = std::max<std::int64_t>(x, 0);
  return r;
}

std::int64_t ExpVec::total_degree() const {
  std::int64_t s = 0;
  for (auto x : entries_) s = checked::add(s, x);
  return s;
}

std::string ExpVec::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + "]";
}

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  return a < b;
}

// SkewForm

SkewForm::SkewForm(IntMatrix lambda) {
  if (lambda.rows() != lambda.cols()) {
    throw InvalidSeed("skew form must be square, got " + std::to_string(lambda.rows()) + "x" +
                      std::to_string(lambda.cols()));
  }
  for (std::size_t i = 0; i < lambda.rows(); ++i) {
    for (std::size_t j = i; j < lambda.cols(); ++j) {
      if (lambda(i, j) != -lambda(j, i)) {
        throw InvalidSeed("lambda is not skew-symmetric at (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")");
      }
    }
  }
  matrix_ = std::make_shared<const IntMatrix>(std::move(lambda));
}

std::int64_t SkewForm::pairing(const ExpVec& e, const ExpVec& f) const {
  const std::size_t m = dimension();
  if (e.size() != m || f.size() != m) throw DimensionError("pairing: ExpVec length != form dimension");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (e[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (f[j] != 0) row = checked::add(row, checked::mul(entry(i, j), f[j]));
    }
    s = checked::add(s, checked::mul(e[i], row));
  }
  return s;
}

// TorusElem

TorusElem::TorusElem(SkewForm form) : form_(std::move(form)) {}

TorusElem TorusElem::monomial(const SkewForm& form, const ExpVec& e, const QLaurent& c) {
  if (e.size() != form.dimension()) {
    throw DimensionError("monomial: exponent length " + std::to_string(e.size()) +
                         " != torus dimension " + std::to_string(form.dimension()));
  }
  TorusElem r(form);
  r.accumulate(e, c);
  return r;
}

TorusElem TorusElem::one(const SkewForm& form) { return monomial(form, ExpVec(form.dimension())); }

TorusElem TorusElem::generator(const SkewForm& form, std::size_t i, std::int64_t power) {
  return monomial(form, ExpVec::unit(form.dimension(), i, power));
}

TorusElem TorusElem::scalar(const SkewForm& form, const QLaurent& c) {
  return monomial(form, ExpVec(form.dimension()), c);
}

QLaurent TorusElem::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QLaurent{} : it->second;
}

void TorusElem::accumulate(const ExpVec& e, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TorusElem::require_same_form(const TorusElem& other, const char* op) const {
  if (!(form_ == other.form_)) {
    throw FormMismatch(std::string(op) + ": operands live over different skew forms");
  }
}

TorusElem& TorusElem::operator+=(const TorusElem& rhs) {
  require_same_form(rhs, "add");
  for (const auto& [e, c] : rhs.terms_) accumulate(e, c);
  return *this;
}

TorusElem& TorusElem::operator-=(const TorusElem& rhs) {
  require_same_form(rhs, "sub");
  for (const auto& [e, c] : rhs.terms_) accumulate(e, -c);
  return *this;
}

TorusElem operator*(const TorusElem& a, const TorusElem& b) {
  a.require_same_form(b, "mul");
  TorusElem r(a.form_);
  for (const auto& [e, c] : a.terms_) {
    for (const auto& [f, d] : b.terms_) {
      r.accumulate(e + f, (c * d).shifted(a.form_.pairing(e, f)));
    }
  }
  return r;
}

TorusElem TorusElem::operator-() const { return scaled(-1); }

TorusElem TorusElem::scaled(const QLaurent& c) const {
  TorusElem r(form_);
  if (c.is_zero()) return r;
  for (const auto& [e, d] : terms_) r.accumulate(e, d * c);
  return r;
}

TorusElem TorusElem::pow(std::uint32_t t) const {
  TorusElem r = one(form_);
  for (std::uint32_t i = 0; i < t; ++i) r = r * *this;
  return r;
}

TorusElem TorusElem::bar() const {
  TorusElem r(form_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.bar());
  return r;
}

bool operator==(const TorusElem& a, const TorusElem& b) {
  a.require_same_form(b, "compare");
  return a.terms_ == b.terms_;
}

std::string TorusElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff;
    bool negative = false;
    if (c.size() == 1) {
      negative = c.terms().begin()->second < 0;
      coeff = (negative ? -c : c).to_string();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += coeff + " * X^" + e.to_string();
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
  throw ParseError("torus element parse error at offset " + std::to_string(pos) + ": " + what +
                   " in \"" + std::string(text) + "\"");
}

}  // namespace

TorusElem TorusElem::parse(const SkewForm& form, std::string_view text) {
  TorusElem result(form);
  if (trim(text) == "0") return result;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool first = true;
  skip_ws();
  if (pos == text.size()) parse_fail(text, pos, "empty input");
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    bool negative = false;
    if (text[pos] == '-' || text[pos] == '+') {
      negative = text[pos] == '-';
      ++pos;
    } else if (!first) {
      parse_fail(text, pos, "expected '+' or '-' between terms");
    }
    first = false;
    skip_ws();
    QLaurent coeff;
    if (pos < text.size() && text[pos] == '(') {
      // Exponents such as q^(5/2) nest inside the coefficient group.
      std::size_t close = pos + 1;
      for (int depth = 1; close < text.size(); ++close) {
        if (text[close] == '(') ++depth;
        if (text[close] == ')' && --depth == 0) break;
      }
      if (close >= text.size()) parse_fail(text, pos, "unbalanced '('");
      coeff = QLaurent::parse(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      skip_ws();
      if (pos >= text.size() || text[pos] != '*') parse_fail(text, pos, "expected '*'");
      ++pos;
      skip_ws();
    } else {
      const std::size_t x = text.find('X', pos);
      if (x == std::string_view::npos) parse_fail(text, pos, "expected 'X^['");
      std::string_view c = trim(text.substr(pos, x - pos));
      if (c.empty() || c.back() != '*') parse_fail(text, pos, "expected '<coefficient> *'");
      c.remove_suffix(1);
      coeff = QLaurent::parse(c);
      pos = x;
    }
    if (text.substr(pos, 3) != "X^[") parse_fail(text, pos, "expected 'X^['");
    pos += 3;
    const std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) parse_fail(text, pos, "unbalanced '['");
    std::vector<std::int64_t> entries;
    std::string_view body = text.substr(pos, close - pos);
    while (!body.empty()) {
      const std::size_t comma = body.find(',');
      const std::string item(trim(body.substr(0, comma)));
      try {
        std::size_t used = 0;
        entries.push_back(std::stoll(item, &used));
        if (used != item.size()) parse_fail(text, pos, "bad exponent '" + item + "'");
      } catch (const std::logic_error&) {
        parse_fail(text, pos, "bad exponent '" + item + "'");
      }
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    pos = close + 1;
    if (entries.size() != form.dimension()) {
      throw DimensionError("parsed exponent vector has length " + std::to_string(entries.size()) +
                           ", torus dimension is " + std::to_string(form.dimension()));
    }
    result.accumulate(ExpVec(std::move(entries)), negative ? -coeff : coeff);
  }
  return result;
}

// Products of generators

TorusElem ordered_product(const SkewForm& form, const ExpVec& a,
                          std::span<const std::size_t> order) {
  const std::size_t m = form.dimension();
  if (a.size() != m) throw DimensionError("ordered_product: exponent length != torus dimension");
  std::vector<bool> seen(m, false);
  if (order.size() != m) throw RangeError("ordered_product: order is not a permutation");
  for (auto i : order) {
    if (i >= m || seen[i]) throw RangeError("ordered_product: order is not a permutation");
    seen[i] = true;
  }
  TorusElem r = TorusElem::one(form);
  for (auto i : order) {
    if (a[i] != 0) r = r * TorusElem::generator(form, i, a[i]);
  }
  return r;
}

TorusElem ordered_monomial(const SkewForm& form,
                           std::span<const std::pair<std::size_t, std::int64_t>> factors) {
  TorusElem r = TorusElem::one(form);
  for (const auto& [i, p] : factors) {
    if (p != 0) r = r * TorusElem::generator(form, i, p);
  }
  return r;
}

QLaurent natural_order_prefactor(const SkewForm& form, const ExpVec& a) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t l = 0; l < k; ++l) {
      s = checked::add(s, checked::mul(checked::mul(a[k], a[l]), form.entry(k, l)));
    }
  }
  return QLaurent::monomial(checked::neg(s));
}

std::ostream& operator<<(std::ostream& os, const TorusElem& a) { return os << a.to_string(); }

}  // namespace qcluster
