/*
 * Copyright 2026 The spinquot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "spinquot/errors.hpp"
#include "spinquot/linalg.hpp"
#include "spinquot/pfaffian.hpp"

using namespace spinquot;

namespace {

Matrix dense(const SkewPoint& a) {
  const int n = a.size();
  Matrix m(n, std::vector<Rational>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) m[i - 1][j - 1] = a.at(i, j);
  return m;
}

// Pf = 1/(2^m m!) sum_sigma sgn(sigma) prod a_{sigma(2i-1), sigma(2i)}.
Rational pfaffian_by_permutations(const SkewPoint& a) {
  const int n = a.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  Rational sum = 0;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    Rational prod = inv % 2 ? -1 : 1;
    for (int i = 0; i < n; i += 2) prod *= a.at(p[i], p[i + 1]);
    sum += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  Rational norm = 1;
  for (int i = 1; i <= n / 2; ++i) norm *= 2 * i;
  return sum / norm;
}

SubsetIndex random_odd_subset(int n, std::mt19937_64& rng) {
  SubsetIndex s;
  do {
    s.clear();
    for (int i = 1; i <= n; ++i)
      if (rng() & 1u) s.push_back(i);
  } while (s.size() % 2 == 0);
  return s;
}

}  // namespace

TEST(Pfaffian, GoldenFourByFour) {
  SkewPoint a(4);
  a.set(1, 3, 1);
  a.set(2, 4, 1);
  EXPECT_EQ(pfaffian(a), Rational(-1));
  SkewPoint b(4);
  b.set(1, 2, 1);
  b.set(3, 4, 1);
  EXPECT_EQ(pfaffian(b), Rational(1));
}

TEST(Pfaffian, SmallCases) {
  EXPECT_EQ(pfaffian(SkewPoint(0)), Rational(1));
  SkewPoint a(2);
  a.set(1, 2, 7);
  EXPECT_EQ(pfaffian(a), Rational(7));
  EXPECT_EQ(a.at(2, 1), Rational(-7));
  EXPECT_EQ(pfaffian(SkewPoint(3)), Rational(0));
  EXPECT_THROW(a.set(1, 1, 1), Error);
  EXPECT_THROW(a.set(1, 3, 1), Error);
}

TEST(Pfaffian, SquareEqualsDeterminant) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const SkewPoint a = random_skew_point(n, rng);
      const Rational pf = pfaffian(a);
      EXPECT_EQ(pf * pf, determinant(dense(a))) << "n=" << n;
    }
  }
}

TEST(Pfaffian, ExpansionAgreesWithPermutationFormula) {
  std::mt19937_64 rng(12);
  for (int n : {2, 4, 6}) {
    for (int trial = 0; trial < 5; ++trial) {
      const SkewPoint a = random_skew_point(n, rng, -9, 9);
      EXPECT_EQ(pfaffian(a), pfaffian_by_permutations(a));
    }
  }
}

TEST(Pfaffian, MatchingSumAgrees) {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 8; ++n) {
    const SkewPoint a = random_skew_point(n, rng);
    const auto all = all_sub_pfaffians(a);
    ASSERT_EQ(all.size(), std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      SubsetIndex s;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) s.push_back(i + 1);
      const Rational v = sub_pfaffian(a, s);
      EXPECT_EQ(v, pfaffian_by_matchings(a, s));
      EXPECT_EQ(v, all[mask]);
    }
  }
}

TEST(Pfaffian, ExchangeIdentityVanishes) {
  std::mt19937_64 rng(14);
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const SkewPoint a = random_skew_point(n, rng);
      const SubsetIndex i1 = random_odd_subset(n, rng), i2 = random_odd_subset(n, rng);
      const PfaffianRelation rel = exchange_terms(i1, i2);
      EXPECT_EQ(evaluate(rel, a), Rational(0));
    }
  }
}

TEST(Pfaffian, ExchangeTermsShape) {
  const auto rel = exchange_terms({1}, {2, 3, 4});
  ASSERT_EQ(rel.terms.size(), 4u);
  EXPECT_EQ(rel.terms[0].sign, -1);
  EXPECT_EQ(rel.terms[0].left, SubsetIndex{});
  EXPECT_EQ(rel.terms[0].right, (SubsetIndex{1, 2, 3, 4}));
  EXPECT_EQ(rel.terms[1].sign, 1);
  EXPECT_EQ(rel.terms[1].left, (SubsetIndex{1, 2}));
  EXPECT_EQ(rel.terms[1].right, (SubsetIndex{3, 4}));
  EXPECT_THROW(exchange_terms({1, 2}, {3}), Error);
}

TEST(Pfaffian, DualPairs) {
  const DualPair d = dual_pair({3, 4, 7, 8}, 4);
  EXPECT_EQ(d.aset, (SubsetIndex{1, 2}));
  EXPECT_EQ(d.bset, (SubsetIndex{1, 2}));
  EXPECT_EQ(index_from_bset({1, 2}, 4), (IndexVector{3, 4, 7, 8}));
  EXPECT_EQ(index_from_bset({}, 4), (IndexVector{1, 2, 3, 4}));
  EXPECT_THROW(dual_pair({1, 2, 3}, 4), Error);
  EXPECT_THROW(dual_pair({1, 2, 3, 3}, 4), Error);
  try {
    dual_pair({1, 2, 3, 9}, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotFullFlagIndex);
  }
  SkewPoint a(4);
  a.set(1, 2, 1);
  try {
    q_eval({2, 3, 4, 5}, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AsymmetricDualPair);
  }
}

TEST(Pfaffian, DualPairRoundTripIsExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      SubsetIndex b;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) b.push_back(i + 1);
      const IndexVector idx = index_from_bset(b, n);
      const DualPair d = dual_pair(idx, n);
      EXPECT_EQ(d.aset, b);
      EXPECT_EQ(d.bset, b);
    }
  }
}

TEST(Pfaffian, QEvalIsSubPfaffian) {
  std::mt19937_64 rng(15);
  const SkewPoint a = random_skew_point(6, rng);
  EXPECT_EQ(q_eval({1, 2, 3, 4, 5, 6}, a), Rational(1));
  EXPECT_EQ(q_eval(index_from_bset({2, 5}, 6), a), a.at(2, 5));
  EXPECT_EQ(q_eval(index_from_bset({1, 2, 3, 4, 5, 6}, 6), a), pfaffian(a));
}

TEST(Pfaffian, JsonRoundTrip) {
  std::mt19937_64 rng(16);
  const SkewPoint a = random_skew_point(5, rng);
  const SkewPoint b = skew_point_from_json(to_json(a));
  ASSERT_EQ(b.size(), 5);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      if (i != j) {
        EXPECT_EQ(a.at(i, j), b.at(i, j));
      }
  EXPECT_THROW(skew_point_from_json(nlohmann::json{{"bogus", 1}}), Error);
}
