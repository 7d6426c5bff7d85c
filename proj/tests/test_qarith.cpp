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

#include <gtest/gtest.h>

#include "qcluster/error.hpp"
#include "qcluster/qarith.hpp"
#include "support.hpp"

namespace qcluster {
namespace {

using testing::as_map;
using testing::geometric_oracle;
using testing::poly;
using testing::subset_count_oracle;

TEST(QArith, QIntegerMatchesGeometricSum) {
  for (std::int64_t d = 1; d <= 3; ++d) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      EXPECT_EQ(as_map(q_int(n, d)), geometric_oracle(n, d)) << "n=" << n << " d=" << d;
    }
  }
  EXPECT_TRUE(q_int(0).is_zero());
}

TEST(QArith, BinomialMatchesSubsetCount) {
  for (int n = 0; n <= 12; ++n) {
    for (int r = -1; r <= n + 1; ++r) {
      EXPECT_EQ(as_map(q_binom(n, r)), subset_count_oracle(n, r)) << "n=" << n << " r=" << r;
    }
  }
}

TEST(QArith, BinomialRoutesAgree) {
  for (std::int64_t d = 1; d <= 3; ++d) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      for (std::int64_t r = 0; r <= n; ++r) {
        EXPECT_EQ(q_binom(n, r, d), q_binom_by_factorials(n, r, d));
      }
    }
  }
}

TEST(QArith, KnownValues) {
  EXPECT_EQ(q_binom(5, 2),
            poly({{0, 1}, {2, 1}, {4, 2}, {6, 2}, {8, 2}, {10, 1}, {12, 1}}));
  EXPECT_EQ(q_binom(2, 1, 2), poly({{0, 1}, {4, 1}}));  // [2,1]_{q^2} = 1 + q^2
  EXPECT_EQ(q_factorial(3), poly({{0, 1}, {2, 2}, {4, 2}, {6, 1}}));
  EXPECT_EQ(q_factorial(0), QLaurent(1));
  EXPECT_EQ(base_power(2, 3), QLaurent::q_pow(3));
  EXPECT_EQ(base_power(1, -1), QLaurent::monomial(-1));
}

TEST(QArith, ValueAtOneIsOrdinaryBinomial) {
  long long row[14] = {1};
  for (int n = 0; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) EXPECT_EQ(q_binom(n, r, 2).value_at_one(), row[r]);
    for (int r = n + 1; r > 0; --r) row[r] += row[r - 1];
  }
}

TEST(QArith, Errors) {
  EXPECT_THROW(q_int(-1), RangeError);
  EXPECT_THROW(q_int(3, 0), RangeError);
  EXPECT_TRUE(q_binom(-2, 1).is_zero());
  EXPECT_THROW(divide_exact(poly({{0, 1}, {4, 1}}), poly({{0, 1}, {2, 1}})), ArithmeticError);
  EXPECT_THROW(divide_exact(QLaurent(1), QLaurent{}), RangeError);
  EXPECT_EQ(divide_exact(poly({{0, 1}, {4, -1}}), poly({{0, 1}, {2, 1}})),
            poly({{0, 1}, {2, -1}}));
}

}  // namespace
}  // namespace qcluster
