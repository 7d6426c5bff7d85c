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
#include <map>
#include <string>

#include "qcluster/error.hpp"

namespace qcluster {

/// Univariate polynomial in a central indeterminate with coefficients in a
/// commutative ring (QLaurent, or another UniPoly for two variables).
/// Zero coefficients are never stored.
template <typename Coeff>
class UniPoly {
 public:
  using TermMap = std::map<std::uint32_t, Coeff>;

  UniPoly() = default;
  explicit UniPoly(const Coeff& c) { set(0, c); }

  static UniPoly monomial(std::uint32_t degree, const Coeff& c) {
    UniPoly p;
    p.set(degree, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(std::uint32_t degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  UniPoly& operator+=(const UniPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) accumulate(k, c);
    return *this;
  }
  UniPoly& operator-=(const UniPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) accumulate(k, -c);
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  UniPoly operator-() const {
    UniPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) r.accumulate(ka + kb, ca * cb);
    }
    return r;
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// `[d]: c; [d]: c; ...` with coefficients rendered by `to_string()`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += "; ";
      out += "[" + std::to_string(k) + "]: " + c.to_string();
    }
    return out;
  }

 private:
  void set(std::uint32_t k, const Coeff& c) {
    if (c.is_zero()) {
      terms_.erase(k);
    } else {
      terms_[k] = c;
    }
  }
  void accumulate(std::uint32_t k, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap terms_;
};

}  // namespace qcluster
