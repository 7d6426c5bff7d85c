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

#include <random>

#include "qcluster/error.hpp"
#include "qcluster/qlaurent.hpp"
#include "support.hpp"

namespace qcluster {
namespace {

using testing::poly;

QLaurent random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> half(-6, 6), coeff(-4, 4), count(0, 5);
  QLaurent p;
  for (auto k = count(rng); k > 0; --k) p += QLaurent::monomial(half(rng), coeff(rng));
  return p;
}

TEST(QLaurent, ZeroIsCanonical) {
  QLaurent z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z, QLaurent(0));
  EXPECT_EQ(poly({{3, 2}, {3, -2}}), z);
  EXPECT_EQ(z.to_string(), "0");
  EXPECT_THROW(z.min_half_exponent(), Error);
}

TEST(QLaurent, Arithmetic) {
  const QLaurent a = poly({{-1, 1}, {1, 1}});  // q^{-1/2} + q^{1/2}
  EXPECT_EQ(a * a, poly({{-2, 1}, {0, 2}, {2, 1}}));
  EXPECT_EQ(a - a, QLaurent{});
  EXPECT_EQ(QLaurent::q_pow(2), QLaurent::monomial(4));
  EXPECT_EQ(a.shifted(3), poly({{2, 1}, {4, 1}}));
  EXPECT_EQ(a.coefficient(1), 1);
  EXPECT_EQ(a.coefficient(0), 0);
  EXPECT_EQ(a.value_at_one(), 2);
}

TEST(QLaurent, RingAxiomsOnRandomElements) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + (-a), QLaurent{});
    EXPECT_EQ(a * QLaurent(1), a);
  }
}

TEST(QLaurent, BarIsAnInvolutiveRingMap) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_laurent(rng), b = random_laurent(rng);
    EXPECT_EQ(a.bar().bar(), a);
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
    EXPECT_EQ((a + b).bar(), a.bar() + b.bar());
  }
  EXPECT_EQ(bar(QLaurent::monomial(3, 5)), QLaurent::monomial(-3, 5));
}

TEST(QLaurent, SubstituteBase) {
  const QLaurent p = poly({{0, 1}, {2, 1}});  // 1 + q
  EXPECT_EQ(p.substitute_base(2), poly({{0, 1}, {4, 1}}));
  EXPECT_EQ(p.substitute_base(-1), p.bar());
  EXPECT_THROW(p.substitute_base(0), RangeError);
}

TEST(QLaurent, TextForm) {
  EXPECT_EQ(poly({{-1, -1}, {3, 1}}).to_string(), "-q^(-1/2) + q^(3/2)");
  EXPECT_EQ(poly({{0, 1}, {4, 1}}).to_string(), "1 + q^2");
  EXPECT_EQ(poly({{-2, 2}}).to_string(), "2*q^-1");
  EXPECT_EQ(poly({{2, 1}}).to_string(), "q");
  EXPECT_EQ(poly({{0, -3}, {2, -1}}).to_string(), "-3 - q");
  EXPECT_EQ(QLaurent::parse("q^(2)"), QLaurent::q_pow(2));
  EXPECT_THROW(QLaurent::parse("q^"), ParseError);
  EXPECT_THROW(QLaurent::parse("1 +"), ParseError);
}

TEST(QLaurent, TextRoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_laurent(rng);
    EXPECT_EQ(QLaurent::parse(a.to_string()), a) << a.to_string();
  }
}

}  // namespace
}  // namespace qcluster
