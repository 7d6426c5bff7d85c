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
#include <string_view>
#include <vector>

// Executable checks of the standalone q-identities: vanishing alternating
// sums, the q-binomial product expansion, q-Vandermonde, the double-sum
// vanishing lemmas and the elementary Pascal/reversal/symmetry/base-change
// identities. Every check expands both sides exactly.
namespace qcluster {

enum class IdentityFamily {
  Vanishing,              // sum_r (-1)^r q^{r(r-1)/2} [d,r] = 0
  ShiftedVanishing,       // sum_r (-1)^r q^{r(r-1)/2 - cr} [d,r] = 0, 0 <= c < d
  ProductExpansion,       // prod_r (1 + q^r x) = sum_k [n,k] q^{k(k+1)/2} x^k
  ProductExpansionBivar,  // prod_r (y + q^r x) = sum_k [n,k] q^{k(k+1)/2} y^{n-k} x^k
  Vandermonde,            // [n,k] = sum_r q^{(d-r)(k-r)} [d,r][n-d,k-r]
  DoubleSumNeg,           // sum_t q^{-tk} sum_{r<=t} (-1)^r q^{r(r-1)/2} [n+1,r] = 0
  DoubleSumPos,           // sum_t q^{t(v-k)} sum_{r<=t} (-1)^r q^{r(r-1)/2-nr} [n+1,r] = 0
  Pascal,                 // [n+1,r] = [n,r] + q^{n+1-r}[n,r-1] = q^r[n,r] + [n,r-1]
  Reversal,               // [n]_{q^d} = q^{d(n-1)} [n]_{q^{-d}}
  Symmetry,               // [n,r]_{q^d} = q^{d r(n-r)} [n,r]_{q^{-d}}
  BaseChange,             // [n]_{q^{rd}} [r]_{q^d} = [n]_{q^d} (1 + q^{dn} + ... + q^{d(r-1)n})
};

struct ParamRange {
  std::string_view name;
  std::int64_t lo;
  std::int64_t hi;
};

/// Static description of one family: its tag, parameter names, the
/// precondition it is proved under, and the exhaustive sweep ranges.
struct FamilyInfo {
  IdentityFamily family;
  std::string_view tag;
  std::vector<ParamRange> sweep;  // one range per parameter, in order
  std::string_view precondition;
  bool (*admissible)(std::span<const std::int64_t>);
};

const std::vector<FamilyInfo>& identity_families();
const FamilyInfo& family_info(IdentityFamily family);
std::optional<IdentityFamily> family_from_tag(std::string_view tag);

enum class Verdict { Pass, Fail };

struct IdentityReport {
  IdentityFamily family;
  std::vector<std::int64_t> params;
  std::string lhs;
  std::string rhs;
  Verdict verdict;

  bool passed() const { return verdict == Verdict::Pass; }
  /// `FAMILY(p=1, q=2) = PASS`
  std::string line() const;
};

struct CheckOptions {
  /// Add 1 to the first q-binomial (or q-integer) evaluated. Used to show
  /// the checker is not vacuous: a perturbed identity must fail.
  bool perturb = false;
};

/// Throws RangeError naming the precondition if params are out of range.
IdentityReport check_identity(IdentityFamily family, std::span<const std::int64_t> params,
                              CheckOptions options = {});

/// Every admissible parameter tuple of the family's sweep, in
/// lexicographic order.
std::vector<std::vector<std::int64_t>> sweep_parameters(IdentityFamily family);

/// check_identity over the whole sweep of a family.
std::vector<IdentityReport> sweep_identity(IdentityFamily family);

}  // namespace qcluster
