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

#include "qcluster/relations.hpp"

#include <cstdlib>

#include "qcluster/checked.hpp"
#include "qcluster/error.hpp"
#include "qcluster/qarith.hpp"

namespace qcluster {

namespace {

using Clock = std::chrono::steady_clock;
using Params = std::vector<std::pair<std::string, std::int64_t>>;

std::int64_t one_based(std::size_t i) { return static_cast<std::int64_t>(i) + 1; }

std::int64_t sign_of(std::int64_t r) { return r % 2 == 0 ? 1 : -1; }

// Running sum of scaled torus elements, counting terms before cancellation.
struct Accumulator {
  explicit Accumulator(const SkewForm& form) : sum(form) {}

  void add(const TorusElem& t, const QLaurent& c) {
    TorusElem s = t.scaled(c);
    expanded += s.size();
    sum += s;
  }

  TorusElem sum;
  std::size_t expanded = 0;
};

VerificationCertificate certify(std::string check, Params params, const TorusElem& remainder,
                                std::size_t expanded, Clock::time_point start) {
  VerificationCertificate c;
  c.check = std::move(check);
  c.params = std::move(params);
  c.pass = remainder.is_zero();
  c.remainder = remainder.to_string();
  c.remainder_terms = remainder.size();
  c.expanded_terms = expanded;
  c.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return c;
}

// sum_{r<=s} (-1)^r (q^d)^{(r(r-1) - 2 r shift)/2} [top, r]_{q^d}
QLaurent partial_alternating(std::int64_t top, std::int64_t s, std::int64_t d, std::int64_t shift) {
  QLaurent acc;
  for (std::int64_t r = 0; r <= s; ++r) {
    acc += q_binom(top, r, d) * base_power(d, r * (r - 1) - 2 * r * shift) * QLaurent(sign_of(r));
  }
  return acc;
}

}  // namespace

RelationEngine::RelationEngine(QuantumSeed seed) : seed_(std::move(seed)) {
  if (!seed_.is_principal()) {
    throw InvalidSeed("relations require a principal-coefficient seed (m = 2n, frozen block = I)");
  }
  y_powers_.resize(n());
  for (std::size_t i = 0; i < n(); ++i) {
    y_powers_[i].push_back(TorusElem::one(form()));
    y_powers_[i].push_back(mutated_variable(seed_, i));
  }
}

void RelationEngine::require_pair(std::size_t i, std::size_t j) const {
  if (i >= n() || j >= n()) {
    throw RangeError("indices must lie in 1.." + std::to_string(n()) + ", got i=" +
                     std::to_string(one_based(i)) + ", j=" + std::to_string(one_based(j)));
  }
  if (i == j) throw RangeError("indices i and j must differ");
}

const TorusElem& RelationEngine::y(std::size_t i) { return y_pow(i, 1); }

const TorusElem& RelationEngine::y_pow(std::size_t i, std::uint32_t t) {
  if (i >= n()) throw RangeError("y index out of range");
  auto& powers = y_powers_[i];
  while (powers.size() <= t) powers.push_back(powers.back() * powers[1]);
  return powers[t];
}

TorusElem RelationEngine::x(std::size_t i, std::int64_t power) const {
  return TorusElem::generator(form(), i, power);
}

TorusElem RelationEngine::mutable_product(std::size_t column, std::int64_t sign, std::int64_t scale,
                                          std::size_t skip) const {
  std::vector<std::pair<std::size_t, std::int64_t>> factors;
  for (auto v : seed_.order()) {
    if (v == skip) continue;
    const std::int64_t e = std::max<std::int64_t>(sign * seed_.b(v, column), 0);
    factors.emplace_back(v, checked::mul(scale, e));
  }
  return ordered_monomial(form(), factors);
}

TorusElem RelationEngine::commutator_witness(std::size_t i, std::size_t j) const {
  require_pair(i, j);
  const std::int64_t bij = seed_.b(i, j);
  const std::int64_t bji = seed_.b(j, i);
  if (bij == 0) return TorusElem(form());
  const std::size_t nn = n();
  if (bij < 0) {
    const std::int64_t di = seed_.d()[i];
    const QLaurent a = base_power(di, -1 - 2 * bij) - base_power(di, -1);
    const TorusElem b = mutable_product(i, 1, 1, j) * mutable_product(j, -1, 1, i);
    return (x(i, -bij - 1) * x(j, bji - 1) * b * x(nn + i)).scaled(a);
  }
  const std::int64_t dj = seed_.d()[j];
  const QLaurent c = base_power(dj, -1) - base_power(dj, -1 - 2 * bji);
  const TorusElem dm = mutable_product(i, -1, 1, j) * mutable_product(j, 1, 1, i);
  return (x(i, bij - 1) * x(j, -bji - 1) * dm * x(nn + j)).scaled(c);
}

VerificationCertificate RelationEngine::commutator_check(std::size_t i, std::size_t j) {
  const auto start = Clock::now();
  require_pair(i, j);
  const TorusElem lhs = y(i) * y(j) - y(j) * y(i);
  const TorusElem witness = commutator_witness(i, j);
  auto cert = certify("commutator", {{"i", one_based(i)}, {"j", one_based(j)}}, lhs - witness,
                      lhs.size() + witness.size(), start);
  cert.note = "witness = " + witness.to_string();
  return cert;
}

TorusElem RelationEngine::power_product_form(std::size_t i, std::uint32_t t, Side side) const {
  if (i >= n()) throw RangeError("power_product: index out of range");
  const std::int64_t di = seed_.d()[i];
  const TorusElem p = mutable_product(i, -1, 1, n());
  const TorusElem qx = mutable_product(i, 1, 1, n()) * x(n() + i);
  TorusElem acc = TorusElem::one(form());
  for (std::int64_t r = 1; r <= static_cast<std::int64_t>(t); ++r) {
    const std::int64_t twice = side == Side::Left ? 2 * r - 1 : 1 - 2 * r;
    acc = acc * (p + qx.scaled(base_power(di, twice)));
  }
  return acc;
}

TorusElem RelationEngine::power_binomial_form(std::size_t i, std::uint32_t t, Side side) const {
  if (i >= n()) throw RangeError("power_product: index out of range");
  const std::int64_t di = seed_.d()[i];
  const std::int64_t tt = t;
  TorusElem acc(form());
  for (std::int64_t k = 0; k <= tt; ++k) {
    const std::int64_t twice = side == Side::Left ? k * k : k * (k - 2 * tt);
    const TorusElem mono = mutable_product(i, -1, tt - k, n()) * mutable_product(i, 1, k, n()) *
                           x(n() + i, k);
    acc += mono.scaled(q_binom(tt, k, di) * base_power(di, twice));
  }
  return acc;
}

VerificationCertificate RelationEngine::power_product_check(std::size_t i, std::uint32_t t,
                                                            Side side) {
  const auto start = Clock::now();
  if (i >= n()) throw RangeError("power_product: index out of range");
  if (t < 1) throw RangeError("power_product requires t >= 1");
  const TorusElem xt = x(i, t);
  const TorusElem brute = side == Side::Left ? y_pow(i, t) * xt : xt * y_pow(i, t);
  const TorusElem product = power_product_form(i, t, side);
  const TorusElem binomial = power_binomial_form(i, t, side);
  const TorusElem d1 = brute - product;
  const TorusElem d2 = brute - binomial;
  const TorusElem& remainder = d1.is_zero() ? d2 : d1;
  auto cert = certify(side == Side::Left ? "power-product-left" : "power-product-right",
                      {{"i", one_based(i)}, {"t", t}}, remainder,
                      brute.size() + product.size() + binomial.size(), start);
  if (!d1.is_zero()) {
    cert.note = "fold differs from product form";
  } else if (!d2.is_zero()) {
    cert.note = "fold differs from q-binomial form";
  }
  return cert;
}

TorusElem RelationEngine::lemma_sum(std::size_t i, std::size_t j, LemmaVariant variant,
                                    std::int64_t m_exp, std::int64_t t_shift) {
  std::size_t expanded = 0;
  return lemma_sum(i, j, variant, m_exp, t_shift, expanded);
}

TorusElem RelationEngine::lemma_sum(std::size_t i, std::size_t j, LemmaVariant variant,
                                    std::int64_t m_exp, std::int64_t t_shift,
                                    std::size_t& expanded) {
  require_pair(i, j);
  const std::int64_t b = seed_.b(i, j);
  const std::int64_t di = seed_.d()[i];
  if (b == 0) throw RangeError("lemma sum requires b_ij != 0");
  const std::int64_t ab = std::abs(b);
  std::int64_t top = ab;   // upper limit of the outer sum
  std::int64_t xexp = 0;   // x_i exponent
  std::int64_t mult = 1;   // multiple of b in the outer twist (b > 0)
  if (variant == LemmaVariant::L32) {
    xexp = ab - 1;
  } else {
    if (t_shift < 0) throw RangeError("L41 requires t >= 0");
    if (t_shift + 1 > ab) throw RangeError("L41 requires t + 1 <= |b_ij|");
    if (m_exp < checked::mul(t_shift + 1, ab)) throw RangeError("L41 requires m >= (t+1)|b_ij|");
    top = m_exp;
    xexp = checked::mul(ab, 1 + t_shift) - 1;
    mult = 1 + t_shift;
  }
  Accumulator acc(form());
  const TorusElem xi = x(i, xexp);
  for (std::int64_t s = 0; s <= top; ++s) {
    QLaurent coeff;
    if (b < 0) {
      coeff = base_power(di, -2 * s) * partial_alternating(top + 1, s, di, 0);
    } else {
      coeff = base_power(di, 2 * s * b * mult) * partial_alternating(top + 1, s, di, top);
    }
    if (coeff.is_zero()) continue;
    acc.add(y_pow(i, static_cast<std::uint32_t>(top - s)) * xi * y_pow(i, static_cast<std::uint32_t>(s)),
            coeff);
  }
  expanded = acc.expanded;
  return acc.sum;
}

VerificationCertificate RelationEngine::lemma_sum_check(std::size_t i, std::size_t j,
                                                        LemmaVariant variant, std::int64_t m_exp,
                                                        std::int64_t t_shift) {
  const auto start = Clock::now();
  std::size_t expanded = 0;
  const TorusElem sum = lemma_sum(i, j, variant, m_exp, t_shift, expanded);
  Params params{{"i", one_based(i)}, {"j", one_based(j)}};
  if (variant == LemmaVariant::L41) {
    params.emplace_back("m", m_exp);
    params.emplace_back("t", t_shift);
  }
  return certify(variant == LemmaVariant::L32 ? "lemma-L32" : "lemma-L41", std::move(params), sum,
                 expanded, start);
}

VerificationCertificate RelationEngine::serre_verify(std::size_t i, std::size_t j) {
  const auto start = Clock::now();
  require_pair(i, j);
  const std::int64_t b = seed_.b(i, j);
  const std::int64_t di = seed_.d()[i];
  const std::int64_t top = std::abs(b) + 1;
  const std::int64_t shift = b > 0 ? b : 0;
  Accumulator acc(form());
  for (std::int64_t r = 0; r <= top; ++r) {
    const QLaurent c =
        q_binom(top, r, di) * base_power(di, r * (r - 1) - 2 * r * shift) * QLaurent(sign_of(r));
    acc.add(y_pow(i, static_cast<std::uint32_t>(top - r)) * y(j) * y_pow(i, static_cast<std::uint32_t>(r)), c);
  }
  return certify("serre", {{"i", one_based(i)}, {"j", one_based(j)}, {"b_ij", b}}, acc.sum,
                 acc.expanded, start);
}

VerificationCertificate RelationEngine::serre_verify_opposite(std::size_t i, std::size_t j) {
  const auto start = Clock::now();
  require_pair(i, j);
  const std::int64_t b = seed_.b(i, j);
  if (b > 0) throw RangeError("serre-opposite requires b_ij <= 0, got b_ij = " + std::to_string(b));
  const std::int64_t dj = seed_.d()[j];
  const std::int64_t top = seed_.b(j, i) + 1;
  Accumulator acc(form());
  for (std::int64_t r = 0; r <= top; ++r) {
    const QLaurent c = q_binom(top, r, dj) * base_power(dj, r * (r - 1)) * QLaurent(sign_of(r));
    acc.add(y_pow(j, static_cast<std::uint32_t>(r)) * y(i) * y_pow(j, static_cast<std::uint32_t>(top - r)), c);
  }
  return certify("serre-opposite", {{"i", one_based(i)}, {"j", one_based(j)}, {"b_ji", top - 1}},
                 acc.sum, acc.expanded, start);
}

VerificationCertificate RelationEngine::higher_verify(std::size_t i, std::size_t j, std::int64_t l,
                                                      std::int64_t m_exp, bool exploratory) {
  const auto start = Clock::now();
  require_pair(i, j);
  const std::int64_t b = seed_.b(i, j);
  const std::int64_t ab = std::abs(b);
  if (l < 1) throw RangeError("higher-order relation requires l > 0");
  if (m_exp < 0) throw RangeError("higher-order relation requires m >= 0");
  bool in_range = true;
  std::string violated;
  if (b != 0 && l > ab) {
    in_range = false;
    violated = "l <= |b_ij| (l = " + std::to_string(l) + ", |b_ij| = " + std::to_string(ab) + ")";
  } else if (b != 0 && m_exp < checked::mul(l, ab)) {
    in_range = false;
    violated = "m >= l*|b_ij| (m = " + std::to_string(m_exp) + ", l*|b_ij| = " +
               std::to_string(l * ab) + ")";
  }
  if (!in_range && !exploratory) throw RangeError("higher-order relation requires " + violated);
  const std::int64_t di = seed_.d()[i];
  const std::int64_t top = m_exp + 1;
  const std::int64_t shift = b > 0 ? m_exp : 0;
  const TorusElem& yjl = y_pow(j, static_cast<std::uint32_t>(l));
  Accumulator acc(form());
  for (std::int64_t r = 0; r <= top; ++r) {
    const QLaurent c =
        q_binom(top, r, di) * base_power(di, r * (r - 1) - 2 * r * shift) * QLaurent(sign_of(r));
    acc.add(y_pow(i, static_cast<std::uint32_t>(top - r)) * yjl * y_pow(i, static_cast<std::uint32_t>(r)), c);
  }
  auto cert = certify("higher",
                      {{"i", one_based(i)}, {"j", one_based(j)}, {"l", l}, {"m", m_exp}, {"b_ij", b}},
                      acc.sum, acc.expanded, start);
  cert.exploratory = !in_range;
  if (!in_range) cert.note = "outside proven range: needs " + violated;
  return cert;
}

TorusElem RelationEngine::reduction_inner_sum(std::size_t i, std::size_t j, std::int64_t l) {
  require_pair(i, j);
  const std::int64_t b = seed_.b(i, j);
  const std::int64_t bji = seed_.b(j, i);
  if (b == 0) throw RangeError("reduction step requires b_ij != 0");
  if (l < 1) throw RangeError("reduction step requires l > 0");
  const std::int64_t di = seed_.d()[i];
  const std::int64_t dj = seed_.d()[j];
  const TorusElem xj = b < 0 ? x(j, bji - 1) : x(j, -bji - 1);
  TorusElem acc(form());
  for (std::int64_t t = 1; t <= l; ++t) {
    const QLaurent c = b < 0 ? base_power(di, -2 * b * (l - t)) : base_power(dj, 2 * (t - l));
    acc += (y_pow(j, static_cast<std::uint32_t>(t - 1)) * xj * y_pow(j, static_cast<std::uint32_t>(l - t)))
               .scaled(c);
  }
  return acc;
}

VerificationCertificate RelationEngine::reduction_support_check(std::size_t i, std::size_t j,
                                                                std::int64_t l) {
  const auto start = Clock::now();
  const TorusElem inner = reduction_inner_sum(i, j, l);
  const std::int64_t b = seed_.b(i, j);
  const std::size_t frozen_j = n() + j;
  TorusElem offending(form());
  for (const auto& [e, c] : inner.terms()) {
    bool ok = false;
    for (std::int64_t k = 0; k < l && !ok; ++k) {
      ok = b < 0 ? e[i] == -b * k : (e[i] == b * k && e[frozen_j] == k);
    }
    if (!ok) offending += TorusElem::monomial(form(), e, c);
  }
  auto cert = certify("reduction-support", {{"i", one_based(i)}, {"j", one_based(j)}, {"l", l}},
                      offending, inner.size(), start);
  return cert;
}

std::vector<VerificationCertificate> RelationEngine::quantum_group_suite() {
  std::vector<VerificationCertificate> out;
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) {
      if (i != j) out.push_back(serre_verify(i, j));
    }
  }
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) {
      if (i != j && seed_.b(i, j) <= 0) out.push_back(serre_verify_opposite(i, j));
    }
  }
  return out;
}

std::vector<TorusElem> one_step_variables(const QuantumSeed& seed) {
  RelationEngine engine(seed);
  std::vector<TorusElem> ys;
  for (std::size_t i = 0; i < seed.n(); ++i) ys.push_back(engine.y(i));
  return ys;
}

IntMatrix cartan_matrix(const IntMatrix& b, std::span<const std::int64_t> d) {
  const std::size_t n = b.rows();
  if (b.cols() != n || d.size() != n) throw DimensionError("cartan_matrix: B must be n x n, d length n");
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c(i, j) = i == j ? 2 : -std::abs(b(i, j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (checked::mul(d[i], c(i, j)) != checked::mul(d[j], c(j, i))) {
        throw InvalidSeed("cartan_matrix: D*C is not symmetric at (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")");
      }
    }
  }
  return c;
}

VerificationCertificate commutator_check(const QuantumSeed& seed, std::size_t i, std::size_t j) {
  return RelationEngine(seed).commutator_check(i, j);
}

VerificationCertificate power_product_check(const QuantumSeed& seed, std::size_t i,
                                            std::uint32_t t, Side side) {
  return RelationEngine(seed).power_product_check(i, t, side);
}

VerificationCertificate lemma_sum_check(const QuantumSeed& seed, std::size_t i, std::size_t j,
                                        LemmaVariant variant, std::int64_t m_exp,
                                        std::int64_t t_shift) {
  return RelationEngine(seed).lemma_sum_check(i, j, variant, m_exp, t_shift);
}

VerificationCertificate serre_verify(const QuantumSeed& seed, std::size_t i, std::size_t j) {
  return RelationEngine(seed).serre_verify(i, j);
}

VerificationCertificate serre_verify_opposite(const QuantumSeed& seed, std::size_t i,
                                              std::size_t j) {
  return RelationEngine(seed).serre_verify_opposite(i, j);
}

VerificationCertificate higher_verify(const QuantumSeed& seed, std::size_t i, std::size_t j,
                                      std::int64_t l, std::int64_t m_exp, bool exploratory) {
  return RelationEngine(seed).higher_verify(i, j, l, m_exp, exploratory);
}

std::vector<VerificationCertificate> quantum_group_suite(const QuantumSeed& seed) {
  return RelationEngine(seed).quantum_group_suite();
}

}  // namespace qcluster
