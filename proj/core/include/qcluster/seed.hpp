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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcluster/int_matrix.hpp"
#include "qcluster/torus.hpp"

namespace qcluster {

/// Outcome of checking B~^T Lambda = [D 0]. On failure, (row, col) is the
/// first violating entry in row-major order (0-based).
struct CompatibilityVerdict {
  bool pass = true;
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t got = 0;
  std::int64_t expected = 0;

  /// Empty on success, otherwise a one-line description with 1-based indices.
  std::string message() const;
};

CompatibilityVerdict validate_compatibility(const IntMatrix& lambda, const IntMatrix& btilde,
                                            std::span<const std::int64_t> d);

/// True iff d is positive and d_j b_ji = -d_i b_ij for all i, j.
bool is_skew_symmetrizable(const IntMatrix& b, std::span<const std::int64_t> d);

/// An immutable quantum seed (x~, Lambda, B~) with skew-symmetrizer D.
/// Indices n..m-1 are frozen.
class QuantumSeed {
 public:
  /// Validates, in order: shapes, skew-symmetry of lambda, positivity of d,
  /// skew-symmetrizability of the principal part, compatibility. Throws
  /// InvalidSeed (or DimensionError for shapes) naming the first failure.
  /// Empty labels default to x1..xm; an empty order defaults to 0 < 1 < ... < n-1.
  static QuantumSeed create(IntMatrix lambda, IntMatrix btilde, std::vector<std::int64_t> d,
                            std::vector<std::string> labels = {},
                            std::vector<std::size_t> order = {});

  const SkewForm& form() const { return form_; }
  const IntMatrix& lambda() const { return form_.matrix(); }
  const IntMatrix& exchange() const { return btilde_; }
  const std::vector<std::int64_t>& d() const { return d_; }
  std::size_t n() const { return btilde_.cols(); }
  std::size_t m() const { return btilde_.rows(); }
  std::int64_t b(std::size_t i, std::size_t j) const { return btilde_(i, j); }
  /// Column b_j of B~ as an exponent vector of length m.
  ExpVec column(std::size_t j) const;
  /// The principal n x n part B.
  IntMatrix principal_part() const;
  const std::vector<std::string>& labels() const { return labels_; }
  /// The linear order on mutable indices, listed from smallest to largest.
  const std::vector<std::size_t>& order() const { return order_; }
  QuantumSeed with_order(std::vector<std::size_t> order) const;
  /// m = 2n and the frozen block of B~ is the identity.
  bool is_principal() const;

  friend bool operator==(const QuantumSeed& a, const QuantumSeed& b) {
    return a.lambda() == b.lambda() && a.btilde_ == b.btilde_ && a.d_ == b.d_;
  }

 private:
  QuantumSeed(SkewForm form, IntMatrix btilde, std::vector<std::int64_t> d,
              std::vector<std::string> labels, std::vector<std::size_t> order)
      : form_(std::move(form)),
        btilde_(std::move(btilde)),
        d_(std::move(d)),
        labels_(std::move(labels)),
        order_(std::move(order)) {}

  SkewForm form_;
  IntMatrix btilde_;
  std::vector<std::int64_t> d_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> order_;
};

CompatibilityVerdict validate_compatibility(const QuantumSeed& seed);

/// Principal-coefficient seed: Lambda = [[0, -D], [D, -DB]], B~ = [B; I].
QuantumSeed principal_seed(const IntMatrix& b, std::span<const std::int64_t> d);

/// One-step mutation mu_k (0-based k < n).
QuantumSeed mutate(const QuantumSeed& seed, std::size_t k);

/// x'_k = X^{-e_k + [b_k]_+} + X^{-e_k + [-b_k]_+} over the seed's form.
TorusElem mutated_variable(const QuantumSeed& seed, std::size_t k);

/// Edges i -> j (0-based) with b_ij > 0, sorted.
std::vector<std::pair<std::size_t, std::size_t>> quiver_edges(const QuantumSeed& seed);

}  // namespace qcluster
