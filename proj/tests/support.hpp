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

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "qcluster/qcluster.hpp"

namespace qcluster::testing {

inline QuantumSeed rank2_seed() {
  static const std::vector<std::int64_t> d{2, 1};
  return principal_seed(IntMatrix{{0, 1}, {-2, 0}}, d);
}

inline QuantumSeed rank3_seed() {
  static const std::vector<std::int64_t> d{1, 1, 1};
  return principal_seed(IntMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}, d);
}

/// sum of c * q^{half/2} over the listed (half, c) pairs.
inline QLaurent poly(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
  QLaurent p;
  for (auto [h, c] : terms) p += QLaurent::monomial(h, c);
  return p;
}

/// Ordered product x_{i1}^{p1} x_{i2}^{p2} ... with 1-based indices.
inline TorusElem xs(const SkewForm& form,
                    std::initializer_list<std::pair<std::size_t, std::int64_t>> factors) {
  std::vector<std::pair<std::size_t, std::int64_t>> zero_based;
  for (auto [i, p] : factors) zero_based.emplace_back(i - 1, p);
  return ordered_monomial(form, zero_based);
}

/// Random (B, D) with n x n skew-symmetrizable B, |b_ij| <= max_entry and
/// 1 <= d_i <= max_d. Each pair (b_ij, b_ji) is drawn uniformly from the
/// solutions of d_i b_ij = -d_j b_ji in the box, so zero pairs occur too.
struct RandomExchange {
  IntMatrix b;
  std::vector<std::int64_t> d;
};

inline RandomExchange random_exchange(std::mt19937_64& rng, std::size_t n, std::int64_t max_entry,
                                      std::int64_t max_d) {
  RandomExchange out{IntMatrix(n, n), std::vector<std::int64_t>(n)};
  std::uniform_int_distribution<std::int64_t> dd(1, max_d);
  for (auto& x : out.d) x = dd(rng);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::pair<std::int64_t, std::int64_t>> options;
      for (std::int64_t a = -max_entry; a <= max_entry; ++a) {
        for (std::int64_t c = -max_entry; c <= max_entry; ++c) {
          if (out.d[i] * a == -out.d[j] * c) options.emplace_back(a, c);
        }
      }
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      const auto [a, c] = options[pick(rng)];
      out.b(i, j) = a;
      out.b(j, i) = c;
    }
  }
  return out;
}

inline QuantumSeed random_principal_seed(std::mt19937_64& rng, std::size_t n,
                                         std::int64_t max_entry = 3, std::int64_t max_d = 3) {
  const auto ex = random_exchange(rng, n, max_entry, max_d);
  return principal_seed(ex.b, ex.d);
}

// Oracles. These share no code with the library beyond the container types.

/// [n]_{q^d} as a geometric sum: coefficient 1 at q^{dk}, 0 <= k < n.
inline std::map<std::int64_t, long long> geometric_oracle(std::int64_t n, std::int64_t d) {
  std::map<std::int64_t, long long> out;
  for (std::int64_t k = 0; k < n; ++k) out[2 * d * k] += 1;
  return out;
}

/// Gaussian binomial [n, r]_q by counting r-subsets of {0..n-1} by their
/// inversion weight (sum of elements minus r(r-1)/2). Keys are
/// half-exponents, as in QLaurent.
inline std::map<std::int64_t, long long> subset_count_oracle(int n, int r) {
  std::map<std::int64_t, long long> out;
  if (r < 0 || r > n) return out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    std::int64_t s = 0;
    for (int b = 0; b < n; ++b) {
      if (mask & (1u << b)) s += b;
    }
    out[2 * (s - r * (r - 1) / 2)] += 1;
  }
  return out;
}

inline std::map<std::int64_t, long long> as_map(const QLaurent& p) {
  std::map<std::int64_t, long long> out;
  for (const auto& [h, c] : p.terms()) out[h] = static_cast<long long>(c);
  return out;
}

/// Naive twisted product on plain containers: each term is (exponent
/// vector, {half-exponent: coefficient}); X^e X^f = q^{e^T L f / 2} X^{e+f}.
using NaiveElem = std::map<std::vector<std::int64_t>, std::map<std::int64_t, long long>>;

inline NaiveElem naive_multiply(const IntMatrix& lambda, const NaiveElem& a, const NaiveElem& b) {
  NaiveElem out;
  const std::size_t m = lambda.rows();
  for (const auto& [e, ce] : a) {
    for (const auto& [f, cf] : b) {
      std::int64_t pair = 0;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) pair += e[i] * lambda(i, j) * f[j];
      }
      std::vector<std::int64_t> g(m);
      for (std::size_t i = 0; i < m; ++i) g[i] = e[i] + f[i];
      auto& slot = out[g];
      for (const auto& [h1, c1] : ce) {
        for (const auto& [h2, c2] : cf) slot[h1 + h2 + pair] += c1 * c2;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    auto& coeffs = it->second;
    for (auto c = coeffs.begin(); c != coeffs.end();) c = c->second == 0 ? coeffs.erase(c) : std::next(c);
    it = coeffs.empty() ? out.erase(it) : std::next(it);
  }
  return out;
}

inline NaiveElem to_naive(const TorusElem& a) {
  NaiveElem out;
  for (const auto& [e, c] : a.terms()) out[e.entries()] = as_map(c);
  return out;
}

/// Random element with up to `terms` terms, exponents in [-2, 2] and small
/// Laurent coefficients.
inline TorusElem random_elem(std::mt19937_64& rng, const SkewForm& form, int terms) {
  std::uniform_int_distribution<std::int64_t> ex(-2, 2), half(-4, 4), coeff(-3, 3);
  TorusElem out(form);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(form.dimension());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex(rng);
    out += TorusElem::monomial(form, e, QLaurent::monomial(half(rng), coeff(rng)));
  }
  return out;
}

}  // namespace qcluster::testing
