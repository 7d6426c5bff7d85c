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

#include "qcluster/identities.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "qcluster/error.hpp"
#include "qcluster/qarith.hpp"
#include "qcluster/unipoly.hpp"

namespace qcluster {

namespace {

using Params = std::span<const std::int64_t>;
using XPoly = UniPoly<QLaurent>;
using XYPoly = UniPoly<XPoly>;

// q-quantities handed to the identity bodies. With perturbation on, the
// first value produced is off by one.
class Quantities {
 public:
  explicit Quantities(bool perturb) : pending_(perturb) {}

  QLaurent binom(std::int64_t n, std::int64_t r, std::int64_t d = 1) {
    return bump(q_binom(n, r, d));
  }
  QLaurent qint(std::int64_t n, std::int64_t d = 1) { return bump(q_int(n, d)); }

 private:
  QLaurent bump(QLaurent v) {
    if (pending_) {
      pending_ = false;
      v += 1;
    }
    return v;
  }

  bool pending_;
};

QLaurent sign(std::int64_t r) { return r % 2 == 0 ? QLaurent(1) : QLaurent(-1); }

struct Sides {
  std::string lhs;
  std::string rhs;
  bool equal;
};

template <typename T>
Sides compare(const T& lhs, const T& rhs) {
  return {lhs.to_string(), rhs.to_string(), lhs == rhs};
}

Sides vanishing(Params p, Quantities& qs) {
  const std::int64_t d = p[0];
  QLaurent sum;
  for (std::int64_t r = 0; r <= d; ++r) {
    sum += sign(r) * base_power(1, r * (r - 1)) * qs.binom(d, r);
  }
  return compare(sum, QLaurent{});
}

Sides shifted_vanishing(Params p, Quantities& qs) {
  const std::int64_t d = p[0];
  const std::int64_t c = p[1];
  QLaurent sum;
  for (std::int64_t r = 0; r <= d; ++r) {
    sum += sign(r) * base_power(1, r * (r - 1) - 2 * c * r) * qs.binom(d, r);
  }
  return compare(sum, QLaurent{});
}

Sides product_expansion(Params p, Quantities& qs) {
  const std::int64_t n = p[0];
  XPoly lhs(QLaurent(1));
  for (std::int64_t r = 1; r <= n; ++r) {
    lhs = lhs * (XPoly(QLaurent(1)) + XPoly::monomial(1, QLaurent::q_pow(r)));
  }
  XPoly rhs;
  for (std::int64_t k = 0; k <= n; ++k) {
    rhs += XPoly::monomial(static_cast<std::uint32_t>(k),
                           qs.binom(n, k) * base_power(1, k * (k + 1)));
  }
  return compare(lhs, rhs);
}

// Outer variable x, coefficients are polynomials in y.
Sides product_expansion_bivar(Params p, Quantities& qs) {
  const std::int64_t n = p[0];
  const XPoly y = XPoly::monomial(1, QLaurent(1));
  XYPoly lhs(XPoly(QLaurent(1)));
  for (std::int64_t r = 1; r <= n; ++r) {
    lhs = lhs * (XYPoly(y) + XYPoly::monomial(1, XPoly(QLaurent::q_pow(r))));
  }
  XYPoly rhs;
  for (std::int64_t k = 0; k <= n; ++k) {
    const QLaurent c = qs.binom(n, k) * base_power(1, k * (k + 1));
    rhs += XYPoly::monomial(static_cast<std::uint32_t>(k),
                            XPoly::monomial(static_cast<std::uint32_t>(n - k), c));
  }
  return compare(lhs, rhs);
}

Sides vandermonde(Params p, Quantities& qs) {
  const std::int64_t n = p[0];
  const std::int64_t d = p[1];
  const std::int64_t k = p[2];
  const QLaurent lhs = qs.binom(n, k);
  QLaurent rhs;
  for (std::int64_t r = 0; r <= k; ++r) {
    rhs += base_power(1, 2 * (d - r) * (k - r)) * qs.binom(d, r) * qs.binom(n - d, k - r);
  }
  return compare(lhs, rhs);
}

// sum_{t=0}^{n} q^{twist(t)} sum_{r=0}^{t} term(r)
QLaurent double_sum(std::int64_t n, const std::function<QLaurent(std::int64_t)>& outer,
                    const std::function<QLaurent(std::int64_t)>& inner) {
  QLaurent partial;
  QLaurent sum;
  for (std::int64_t t = 0; t <= n; ++t) {
    partial += inner(t);
    sum += outer(t) * partial;
  }
  return sum;
}

Sides double_sum_neg(Params p, Quantities& qs) {
  const std::int64_t n = p[0];
  const std::int64_t k = p[1];
  const QLaurent sum = double_sum(
      n, [&](std::int64_t t) { return QLaurent::q_pow(-t * k); },
      [&](std::int64_t r) { return sign(r) * base_power(1, r * (r - 1)) * qs.binom(n + 1, r); });
  return compare(sum, QLaurent{});
}

Sides double_sum_pos(Params p, Quantities& qs) {
  const std::int64_t n = p[0];
  const std::int64_t v = p[1];
  const std::int64_t k = p[2];
  const QLaurent sum = double_sum(
      n, [&](std::int64_t t) { return QLaurent::q_pow(t * (v - k)); },
      [&](std::int64_t r) {
        return sign(r) * base_power(1, r * (r - 1) - 2 * n * r) * qs.binom(n + 1, r);
      });
  return compare(sum, QLaurent{});
}

Sides pascal(Params p, Quantities& qs) {
  const std::int64_t n = p[0];
  const std::int64_t r = p[1];
  const std::int64_t d = p[2];
  const QLaurent lhs = qs.binom(n + 1, r, d);
  const QLaurent first = qs.binom(n, r, d) + base_power(d, 2 * (n + 1 - r)) * qs.binom(n, r - 1, d);
  const QLaurent second = base_power(d, 2 * r) * qs.binom(n, r, d) + qs.binom(n, r - 1, d);
  const QLaurent& rhs = first == second ? first : second;
  return {lhs.to_string(), rhs.to_string(), lhs == first && first == second};
}

Sides reversal(Params p, Quantities& qs) {
  const std::int64_t n = p[0];
  const std::int64_t d = p[1];
  const QLaurent lhs = qs.qint(n, d);
  const QLaurent rhs = base_power(d, 2 * (n - 1)) * q_int(n, 1).substitute_base(-d);
  return compare(lhs, rhs);
}

Sides symmetry(Params p, Quantities& qs) {
  const std::int64_t n = p[0];
  const std::int64_t r = p[1];
  const std::int64_t d = p[2];
  const QLaurent lhs = qs.binom(n, r, d);
  const QLaurent rhs = base_power(d, 2 * r * (n - r)) * q_binom(n, r, 1).substitute_base(-d);
  return compare(lhs, rhs);
}

Sides base_change(Params p, Quantities& qs) {
  const std::int64_t n = p[0];
  const std::int64_t r = p[1];
  const std::int64_t d = p[2];
  const QLaurent lhs = qs.qint(n, r * d) * q_int(r, d);
  QLaurent geometric;
  for (std::int64_t s = 0; s < r; ++s) geometric += QLaurent::q_pow(d * s * n);
  const QLaurent rhs = q_int(n, d) * geometric;
  return compare(lhs, rhs);
}

using Body = Sides (*)(Params, Quantities&);

Body body_of(IdentityFamily f) {
  switch (f) {
    case IdentityFamily::Vanishing: return vanishing;
    case IdentityFamily::ShiftedVanishing: return shifted_vanishing;
    case IdentityFamily::ProductExpansion: return product_expansion;
    case IdentityFamily::ProductExpansionBivar: return product_expansion_bivar;
    case IdentityFamily::Vandermonde: return vandermonde;
    case IdentityFamily::DoubleSumNeg: return double_sum_neg;
    case IdentityFamily::DoubleSumPos: return double_sum_pos;
    case IdentityFamily::Pascal: return pascal;
    case IdentityFamily::Reversal: return reversal;
    case IdentityFamily::Symmetry: return symmetry;
    case IdentityFamily::BaseChange: return base_change;
  }
  throw RangeError("unknown identity family");
}

std::vector<FamilyInfo> build_families() {
  using F = IdentityFamily;
  return {
      {F::Vanishing, "VANISHING", {{"d", 1, 10}}, "d >= 1",
       [](Params p) { return p[0] >= 1; }},
      {F::ShiftedVanishing, "SHIFTED_VANISHING", {{"d", 1, 10}, {"c", 0, 9}},
       "d >= 1 and 0 <= c <= d-1",
       [](Params p) { return p[0] >= 1 && p[1] >= 0 && p[1] <= p[0] - 1; }},
      {F::ProductExpansion, "PRODUCT_EXPANSION", {{"n", 1, 10}}, "n >= 1",
       [](Params p) { return p[0] >= 1; }},
      {F::ProductExpansionBivar, "PRODUCT_EXPANSION_BIVAR", {{"n", 1, 10}}, "n >= 1",
       [](Params p) { return p[0] >= 1; }},
      {F::Vandermonde, "VANDERMONDE", {{"n", 0, 8}, {"d", 0, 8}, {"k", 0, 8}},
       "k >= 0 and 0 <= d <= n",
       [](Params p) { return p[2] >= 0 && p[1] >= 0 && p[1] <= p[0]; }},
      {F::DoubleSumNeg, "DOUBLE_SUM_NEG", {{"n", 1, 8}, {"k", 1, 8}}, "1 <= k <= n",
       [](Params p) { return p[1] >= 1 && p[1] <= p[0]; }},
      {F::DoubleSumPos, "DOUBLE_SUM_POS", {{"n", 1, 8}, {"v", 1, 8}, {"k", 0, 7}},
       "0 <= k <= v-1 and v <= n",
       [](Params p) { return p[2] >= 0 && p[2] <= p[1] - 1 && p[1] <= p[0]; }},
      {F::Pascal, "PASCAL", {{"n", 0, 11}, {"r", 0, 12}, {"d", 1, 3}},
       "n >= 0, r >= 0 and d >= 1",
       [](Params p) { return p[0] >= 0 && p[1] >= 0 && p[2] >= 1; }},
      {F::Reversal, "REVERSAL", {{"n", 0, 12}, {"d", 1, 3}}, "n >= 0 and d >= 1",
       [](Params p) { return p[0] >= 0 && p[1] >= 1; }},
      {F::Symmetry, "SYMMETRY", {{"n", 0, 10}, {"r", 0, 10}, {"d", 1, 3}},
       "0 <= r <= n and d >= 1",
       [](Params p) { return p[1] >= 0 && p[1] <= p[0] && p[2] >= 1; }},
      {F::BaseChange, "BASE_CHANGE", {{"n", 1, 8}, {"r", 1, 8}, {"d", 1, 3}},
       "n >= 1, r >= 1 and d >= 1",
       [](Params p) { return p[0] >= 1 && p[1] >= 1 && p[2] >= 1; }},
  };
}

// Extra sweep filters beyond the precondition (e.g. Pascal's r <= n+1).
bool in_sweep(IdentityFamily f, Params p) {
  if (f == IdentityFamily::Pascal) return p[1] <= p[0] + 1;
  return true;
}

}  // namespace

const std::vector<FamilyInfo>& identity_families() {
  static const std::vector<FamilyInfo> families = build_families();
  return families;
}

const FamilyInfo& family_info(IdentityFamily family) {
  for (const auto& info : identity_families()) {
    if (info.family == family) return info;
  }
  throw RangeError("unknown identity family");
}

std::optional<IdentityFamily> family_from_tag(std::string_view tag) {
  for (const auto& info : identity_families()) {
    if (info.tag == tag) return info.family;
  }
  return std::nullopt;
}

std::string IdentityReport::line() const {
  const FamilyInfo& info = family_info(family);
  std::string out(info.tag);
  out += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::string(info.sweep[i].name) + "=" + std::to_string(params[i]);
  }
  out += ") = ";
  out += verdict == Verdict::Pass ? "PASS" : "FAIL";
  return out;
}

IdentityReport check_identity(IdentityFamily family, std::span<const std::int64_t> params,
                              CheckOptions options) {
  const FamilyInfo& info = family_info(family);
  if (params.size() != info.sweep.size()) {
    throw RangeError(std::string(info.tag) + " takes " + std::to_string(info.sweep.size()) +
                     " parameters, got " + std::to_string(params.size()));
  }
  if (!info.admissible(params)) {
    throw RangeError(std::string(info.tag) + " requires " + std::string(info.precondition));
  }
  Quantities qs(options.perturb);
  const Sides sides = body_of(family)(params, qs);
  return IdentityReport{family, std::vector<std::int64_t>(params.begin(), params.end()),
                        sides.lhs, sides.rhs, sides.equal ? Verdict::Pass : Verdict::Fail};
}

std::vector<std::vector<std::int64_t>> sweep_parameters(IdentityFamily family) {
  const FamilyInfo& info = family_info(family);
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> current(info.sweep.size());
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == info.sweep.size()) {
      if (info.admissible(current) && in_sweep(family, current)) out.push_back(current);
      return;
    }
    for (std::int64_t v = info.sweep[depth].lo; v <= info.sweep[depth].hi; ++v) {
      current[depth] = v;
      rec(depth + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<IdentityReport> sweep_identity(IdentityFamily family) {
  std::vector<IdentityReport> out;
  for (const auto& p : sweep_parameters(family)) out.push_back(check_identity(family, p));
  return out;
}

}  // namespace qcluster
