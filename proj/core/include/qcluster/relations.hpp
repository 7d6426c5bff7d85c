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

#include <chrono>
#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "qcluster/seed.hpp"
#include "qcluster/torus.hpp"

namespace qcluster {

/// Result of one exact verification. pass iff the remainder is zero.
struct VerificationCertificate {
  std::string check;
  /// Instance parameters in report order; indices are 1-based.
  std::vector<std::pair<std::string, std::int64_t>> params;
  bool pass = false;
  /// Set when the instance lies outside the proven parameter range.
  bool exploratory = false;
  /// Canonical rendering of the remainder ("0" on success).
  std::string remainder = "0";
  std::size_t remainder_terms = 0;
  /// Terms summed before cancellation.
  std::size_t expanded_terms = 0;
  std::chrono::nanoseconds elapsed{0};
  std::string note;
};

enum class Side { Left, Right };
enum class LemmaVariant { L32, L41 };

/// Verification engine over a principal seed. Caches powers of the one-step
/// variables y_i, so one engine should not be shared between threads.
/// All indices are 0-based; certificates report them 1-based.
class RelationEngine {
 public:
  /// Throws InvalidSeed unless the seed is principal.
  explicit RelationEngine(QuantumSeed seed);

  const QuantumSeed& seed() const { return seed_; }
  const SkewForm& form() const { return seed_.form(); }
  std::size_t n() const { return seed_.n(); }

  const TorusElem& y(std::size_t i);
  /// y_i^t, memoized. References stay valid for the engine's lifetime.
  const TorusElem& y_pow(std::size_t i, std::uint32_t t);
  TorusElem x(std::size_t i, std::int64_t power = 1) const;

  /// The closed form of y_i y_j - y_j y_i: A x_i^{-b_ij-1} x_j^{b_ji-1} B x_{n+i}
  /// for b_ij < 0, C x_i^{b_ij-1} x_j^{-b_ji-1} D x_{n+j} for b_ij > 0, zero
  /// for b_ij = 0.
  TorusElem commutator_witness(std::size_t i, std::size_t j) const;
  VerificationCertificate commutator_check(std::size_t i, std::size_t j);

  /// Product form of y_i^t x_i^t (Left) or x_i^t y_i^t (Right).
  TorusElem power_product_form(std::size_t i, std::uint32_t t, Side side) const;
  /// q-binomial expansion of the same product.
  TorusElem power_binomial_form(std::size_t i, std::uint32_t t, Side side) const;
  /// Brute-force fold against both closed forms.
  VerificationCertificate power_product_check(std::size_t i, std::uint32_t t, Side side);

  /// The alternating lemma sum as a torus element. L32 ignores m_exp and
  /// t_shift. Throws RangeError on a violated precondition.
  TorusElem lemma_sum(std::size_t i, std::size_t j, LemmaVariant variant, std::int64_t m_exp = 0,
                      std::int64_t t_shift = 0);
  VerificationCertificate lemma_sum_check(std::size_t i, std::size_t j, LemmaVariant variant,
                                          std::int64_t m_exp = 0, std::int64_t t_shift = 0);

  VerificationCertificate serre_verify(std::size_t i, std::size_t j);
  /// Requires b_ij <= 0.
  VerificationCertificate serre_verify_opposite(std::size_t i, std::size_t j);
  /// Requires b_ij = 0 and m >= 0, or 0 < l <= |b_ij| and m >= l |b_ij|,
  /// unless exploratory is set.
  VerificationCertificate higher_verify(std::size_t i, std::size_t j, std::int64_t l,
                                        std::int64_t m_exp, bool exploratory = false);

  /// The inner sum of the higher-order reduction (sum over t of twisted
  /// y_j^{t-1} x_j^{...} y_j^{l-t}).
  TorusElem reduction_inner_sum(std::size_t i, std::size_t j, std::int64_t l);
  /// Checks that x_i (and x_{n+j} when b_ij > 0) occurs in the inner sum
  /// only through the powers k |b_ij|, 0 <= k < l. Requires b_ij != 0.
  VerificationCertificate reduction_support_check(std::size_t i, std::size_t j, std::int64_t l);

  /// serre_verify on every ordered pair, then serre_verify_opposite on
  /// every ordered pair with b_ij <= 0.
  std::vector<VerificationCertificate> quantum_group_suite();

 private:
  void require_pair(std::size_t i, std::size_t j) const;
  TorusElem lemma_sum(std::size_t i, std::size_t j, LemmaVariant variant, std::int64_t m_exp,
                      std::int64_t t_shift, std::size_t& expanded);
  TorusElem mutable_product(std::size_t column, std::int64_t sign, std::int64_t scale,
                            std::size_t skip) const;

  QuantumSeed seed_;
  std::vector<std::deque<TorusElem>> y_powers_;
};

/// y_1, ..., y_n over the seed's own form. Throws InvalidSeed unless principal.
std::vector<TorusElem> one_step_variables(const QuantumSeed& seed);

/// c_ii = 2, c_ij = -|b_ij|. Throws InvalidSeed unless D C is symmetric.
IntMatrix cartan_matrix(const IntMatrix& b, std::span<const std::int64_t> d);

VerificationCertificate commutator_check(const QuantumSeed& seed, std::size_t i, std::size_t j);
VerificationCertificate power_product_check(const QuantumSeed& seed, std::size_t i,
                                            std::uint32_t t, Side side);
VerificationCertificate lemma_sum_check(const QuantumSeed& seed, std::size_t i, std::size_t j,
                                        LemmaVariant variant, std::int64_t m_exp = 0,
                                        std::int64_t t_shift = 0);
VerificationCertificate serre_verify(const QuantumSeed& seed, std::size_t i, std::size_t j);
VerificationCertificate serre_verify_opposite(const QuantumSeed& seed, std::size_t i,
                                              std::size_t j);
VerificationCertificate higher_verify(const QuantumSeed& seed, std::size_t i, std::size_t j,
                                      std::int64_t l, std::int64_t m_exp,
                                      bool exploratory = false);
std::vector<VerificationCertificate> quantum_group_suite(const QuantumSeed& seed);

}  // namespace qcluster
