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

#include "qcluster/seed.hpp"

#include <algorithm>
#include <cstdlib>

#include "qcluster/checked.hpp"
#include "qcluster/error.hpp"

namespace qcluster {

namespace {

std::string pos(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void require_permutation(const std::vector<std::size_t>& order, std::size_t n) {
  std::vector<bool> seen(n, false);
  bool ok = order.size() == n;
  for (auto i : order) {
    if (!ok || i >= n || seen[i]) {
      ok = false;
      break;
    }
    seen[i] = true;
  }
  if (!ok) throw InvalidSeed("order must be a permutation of 1.." + std::to_string(n));
}

void require_index(const QuantumSeed& seed, std::size_t k, const char* what) {
  if (k >= seed.n()) {
    throw RangeError(std::string(what) + ": index " + std::to_string(k + 1) + " outside 1.." +
                     std::to_string(seed.n()));
  }
}

}  // namespace

std::string CompatibilityVerdict::message() const {
  if (pass) return {};
  return "compatibility violated at (i,j) = " + pos(row, col) + ": (B~^T Lambda)_ij = " +
         std::to_string(got) + ", expected " + std::to_string(expected);
}

CompatibilityVerdict validate_compatibility(const IntMatrix& lambda, const IntMatrix& btilde,
                                            std::span<const std::int64_t> d) {
  const std::size_t m = btilde.rows();
  const std::size_t n = btilde.cols();
  if (lambda.rows() != m || lambda.cols() != m || d.size() != n) {
    throw DimensionError("validate_compatibility: shapes of lambda, btilde, d disagree");
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      std::int64_t s = 0;
      for (std::size_t t = 0; t < m; ++t) {
        s = checked::add(s, checked::mul(btilde(t, j), lambda(t, i)));
      }
      const std::int64_t want = i == j ? d[j] : 0;
      if (s != want) return {false, j, i, s, want};
    }
  }
  return {};
}

CompatibilityVerdict validate_compatibility(const QuantumSeed& seed) {
  return validate_compatibility(seed.lambda(), seed.exchange(), seed.d());
}

bool is_skew_symmetrizable(const IntMatrix& b, std::span<const std::int64_t> d) {
  if (b.rows() != b.cols() || d.size() != b.rows()) return false;
  if (std::any_of(d.begin(), d.end(), [](std::int64_t x) { return x <= 0; })) return false;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = i; j < b.cols(); ++j) {
      if (checked::mul(d[i], b(i, j)) != -checked::mul(d[j], b(j, i))) return false;
    }
  }
  return true;
}

QuantumSeed QuantumSeed::create(IntMatrix lambda, IntMatrix btilde, std::vector<std::int64_t> d,
                                std::vector<std::string> labels, std::vector<std::size_t> order) {
  const std::size_t m = btilde.rows();
  const std::size_t n = btilde.cols();
  if (n == 0 || n > m) {
    throw DimensionError("btilde must be m x n with 1 <= n <= m, got " + std::to_string(m) + "x" +
                         std::to_string(n));
  }
  if (lambda.rows() != m || lambda.cols() != m) {
    throw DimensionError("lambda must be " + std::to_string(m) + "x" + std::to_string(m));
  }
  if (d.size() != n) throw DimensionError("d must have length n = " + std::to_string(n));
  SkewForm form(std::move(lambda));
  for (std::size_t j = 0; j < n; ++j) {
    if (d[j] <= 0) throw InvalidSeed("d_" + std::to_string(j + 1) + " must be positive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (checked::mul(d[i], btilde(i, j)) != -checked::mul(d[j], btilde(j, i))) {
        throw InvalidSeed("D*B is not skew-symmetric at " + pos(i, j));
      }
    }
    if (btilde(i, i) != 0) throw InvalidSeed("D*B is not skew-symmetric at " + pos(i, i));
  }
  const auto verdict = validate_compatibility(form.matrix(), btilde, d);
  if (!verdict.pass) throw InvalidSeed(verdict.message());
  if (labels.empty()) {
    for (std::size_t i = 0; i < m; ++i) labels.push_back("x" + std::to_string(i + 1));
  } else if (labels.size() != m) {
    throw DimensionError("labels must have length m = " + std::to_string(m));
  }
  if (order.empty()) {
    order.resize(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
  } else {
    require_permutation(order, n);
  }
  return QuantumSeed(std::move(form), std::move(btilde), std::move(d), std::move(labels),
                     std::move(order));
}

ExpVec QuantumSeed::column(std::size_t j) const {
  if (j >= n()) throw RangeError("column index out of range");
  ExpVec e(m());
  for (std::size_t t = 0; t < m(); ++t) e[t] = btilde_(t, j);
  return e;
}

IntMatrix QuantumSeed::principal_part() const {
  IntMatrix b(n(), n());
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) b(i, j) = btilde_(i, j);
  }
  return b;
}

QuantumSeed QuantumSeed::with_order(std::vector<std::size_t> order) const {
  require_permutation(order, n());
  QuantumSeed s = *this;
  s.order_ = std::move(order);
  return s;
}

bool QuantumSeed::is_principal() const {
  if (m() != 2 * n()) return false;
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) {
      if (btilde_(n() + i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

QuantumSeed principal_seed(const IntMatrix& b, std::span<const std::int64_t> d) {
  const std::size_t n = b.rows();
  if (b.cols() != n || d.size() != n) throw DimensionError("principal_seed: B must be n x n, d length n");
  if (!is_skew_symmetrizable(b, d)) {
    throw InvalidSeed("principal_seed: (B, D) is not skew-symmetrizable");
  }
  IntMatrix lambda(2 * n, 2 * n);
  IntMatrix btilde(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    lambda(i, n + i) = -d[i];
    lambda(n + i, i) = d[i];
    for (std::size_t j = 0; j < n; ++j) {
      lambda(n + i, n + j) = -checked::mul(d[i], b(i, j));
      btilde(i, j) = b(i, j);
    }
    btilde(n + i, i) = 1;
  }
  return QuantumSeed::create(std::move(lambda), std::move(btilde), {d.begin(), d.end()});
}

QuantumSeed mutate(const QuantumSeed& seed, std::size_t k) {
  require_index(seed, k, "mutate");
  const auto verdict = validate_compatibility(seed);
  if (!verdict.pass) throw InvalidSeed("mutate: " + verdict.message());
  const std::size_t m = seed.m();
  const std::size_t n = seed.n();
  const IntMatrix& b = seed.exchange();
  IntMatrix b2(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        b2(i, j) = -b(i, j);
        continue;
      }
      const std::int64_t num = checked::add(checked::mul(std::abs(b(i, k)), b(k, j)),
                                            checked::mul(b(i, k), std::abs(b(k, j))));
      if (num % 2 != 0) throw ArithmeticError("mutate: odd numerator in exchange-matrix update");
      b2(i, j) = checked::add(b(i, j), num / 2);
    }
  }
  const IntMatrix& lam = seed.lambda();
  IntMatrix lam2 = lam;
  for (std::size_t j = 0; j < m; ++j) {
    if (j == k) continue;
    std::int64_t s = checked::neg(lam(k, j));
    for (std::size_t t = 0; t < m; ++t) {
      if (b(t, k) > 0) s = checked::add(s, checked::mul(b(t, k), lam(t, j)));
    }
    lam2(k, j) = s;
    lam2(j, k) = checked::neg(s);
  }
  lam2(k, k) = 0;
  return QuantumSeed::create(std::move(lam2), std::move(b2), seed.d(), seed.labels(), seed.order());
}

TorusElem mutated_variable(const QuantumSeed& seed, std::size_t k) {
  require_index(seed, k, "mutated_variable");
  const ExpVec col = seed.column(k);
  const ExpVec base = ExpVec::unit(seed.m(), k, -1);
  return TorusElem::monomial(seed.form(), base + col.positive_part()) +
         TorusElem::monomial(seed.form(), base + (-col).positive_part());
}

std::vector<std::pair<std::size_t, std::size_t>> quiver_edges(const QuantumSeed& seed) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < seed.n(); ++i) {
    for (std::size_t j = 0; j < seed.n(); ++j) {
      if (seed.b(i, j) > 0) edges.emplace_back(i, j);
    }
  }
  return edges;
}

}  // namespace qcluster
