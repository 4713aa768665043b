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

#include <random>

#include "spinquot/catalog.hpp"
#include "spinquot/errors.hpp"
#include "spinquot/straighten.hpp"

using namespace spinquot;

namespace {

Rational eval_monomial(const Monomial& m, const SkewPoint& a) {
  Rational v = 1;
  for (const auto& r : m) v *= q_eval(r, a);
  return v;
}

Rational eval_expansion(const StdExpansion& e, const SkewPoint& a) {
  Rational v = 0;
  for (const auto& [m, c] : e) v += c * eval_monomial(m, a);
  return v;
}

bool leq(const IndexVector& a, const IndexVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

StdExpansion scaled_sum(std::initializer_list<std::pair<int, StdExpansion>> parts) {
  StdExpansion out;
  for (const auto& [s, e] : parts)
    for (const auto& [m, c] : e) out[m] += s * c;
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

}  // namespace

TEST(Straighten, Spin8Identity) {
  const StdExpansion e = straighten_pair({1, 4, 6, 7}, {2, 3, 5, 8}, 4);
  const StdExpansion expected{{{{1, 2, 3, 4}, {5, 6, 7, 8}}, Rational(1)},
                              {{{1, 2, 5, 6}, {3, 4, 7, 8}}, Rational(-1)},
                              {{{1, 3, 5, 7}, {2, 4, 6, 8}}, Rational(1)}};
  EXPECT_EQ(e, expected);
  EXPECT_EQ(straighten_pair({2, 3, 5, 8}, {1, 4, 6, 7}, 4), expected);
}

TEST(Straighten, StandardPairIsFixed) {
  const StdExpansion e = straighten_pair({3, 4, 7, 8}, {1, 2, 3, 4}, 4);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.begin()->first, (Monomial{{1, 2, 3, 4}, {3, 4, 7, 8}}));
  EXPECT_EQ(e.begin()->second, Rational(1));
}

TEST(Straighten, RejectsNonPfaffianRows) {
  try {
    straighten_pair({1, 2, 3, 5}, {1, 2, 3, 4}, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAPfaffianIndex);
  }
  Straightener s(4);
  EXPECT_THROW(s.straighten(Monomial{{1, 2, 3, 4}, {1, 2, 4, 3}}), Error);
}

TEST(Straighten, TermBoundsAndEvaluation) {
  std::mt19937_64 rng(21);
  for (int n : {4, 6, 8}) {
    Straightener s(n);
    const auto reps = minimal_coset_reps_alpha_n(n);
    std::vector<SkewPoint> points;
    for (int i = 0; i < 2; ++i) points.push_back(random_skew_point(n, rng));
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        const auto& a = reps[i];
        const auto& b = reps[j];
        if (bruhat_leq(a, b)) continue;
        const StdExpansion& e = s.straighten_pair(a, b);
        ASSERT_FALSE(e.empty());
        const auto content = content_of({a, b}, n);
        for (const auto& [m, c] : e) {
          ASSERT_EQ(m.size(), 2u);
          EXPECT_TRUE(bruhat_leq(m[0], m[1]));
          EXPECT_TRUE(leq(m[0], a) && leq(m[0], b));
          EXPECT_TRUE(leq(a, m[1]) && leq(b, m[1]));
          EXPECT_TRUE(m[0] != a && m[0] != b);
          EXPECT_EQ(content_of(m, n), content);
          EXPECT_EQ(c.get_den(), 1);
        }
        if (n <= 6 || j % 7 == 0) {
          for (const auto& p : points) EXPECT_EQ(eval_expansion(e, p), eval_monomial({a, b}, p));
        }
      }
    }
    EXPECT_LE(s.stats().max_depth, s.fuel());
  }
}

TEST(Straighten, LongMonomialsEvaluateCorrectly) {
  std::mt19937_64 rng(22);
  const int n = 6;
  const auto reps = minimal_coset_reps_alpha_n(n);
  Straightener s(n);
  for (int trial = 0; trial < 20; ++trial) {
    Monomial m;
    for (int i = 0; i < 4; ++i) m.push_back(reps[rng() % reps.size()]);
    std::sort(m.begin(), m.end());
    const StdExpansion e = s.straighten(m);
    for (const auto& [mono, c] : e) {
      EXPECT_TRUE(is_standard_monomial(mono));
      EXPECT_EQ(mono.size(), 4u);
      EXPECT_EQ(content_of(mono, n), content_of(m, n));
    }
    const SkewPoint p = random_skew_point(n, rng);
    EXPECT_EQ(eval_expansion(e, p), eval_monomial(m, p));
  }
}

TEST(Straighten, SamplerPointsLieOnTheSchubertVariety) {
  const IndexVector w6 = catalog::spin8n_schubert(2)[5];
  SchubertSampler sampler(8, w6, 3);
  const auto reps = minimal_coset_reps_alpha_n(8);
  for (int t = 0; t < 3; ++t) {
    const SkewPoint p = sampler.sample();
    for (const auto& r : reps)
      if (!bruhat_leq(r, w6)) {
        EXPECT_EQ(q_eval(r, p), Rational(0)) << format_int_list(r);
      }
  }
}

TEST(Straighten, RestrictionMatchesQuadraticIdentity) {
  const int n = 8;
  const IndexVector w6 = catalog::spin8n_schubert(2)[5];
  const auto tabs = catalog::spin8n_tableaux(2);
  auto rows = [&](std::initializer_list<const char*> names) {
    std::vector<Tableau> fs;
    for (const char* nm : names) fs.push_back(catalog::find(tabs, nm));
    return monomial_of(fs);
  };
  Straightener s(n);
  const StdExpansion x4x5 = s.straighten(rows({"X4", "X5"}), &w6);
  const StdExpansion rhs = scaled_sum({{1, s.straighten(rows({"X3", "X6"}), &w6)},
                                       {-1, s.straighten(rows({"Y2"}), &w6)},
                                       {1, s.straighten(rows({"Y1"}), &w6)}});
  EXPECT_EQ(x4x5, rhs);
  // Unrestricted, the same product has an extra term outside X(w6).
  const StdExpansion full = s.straighten(rows({"X4", "X5"}));
  EXPECT_EQ(restrict(full, w6), x4x5);
  EXPECT_GT(full.size(), x4x5.size());
}

TEST(Straighten, InterpolationAgreesWithSymbolic) {
  for (int n : {4, 8}) {
    const IndexVector w = n == 4 ? IndexVector{5, 6, 7, 8} : catalog::spin8n_schubert(2)[5];
    const auto basis = enumerate_basis_omega_n(n, w, 1);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); j += 3)
        EXPECT_NO_THROW(expand_product({basis[i], basis[j]}, w, {ExpandMethod::Both, 7}));
  }
}

TEST(Straighten, ExpandProductChecksFactors) {
  const Tableau a = make_omega_n(4, {{1, 2, 3, 4}, {5, 6, 7, 8}});
  const Tableau b = make_omega_n(6, {{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12}});
  EXPECT_THROW(expand_product({a, b}, {5, 6, 7, 8}), Error);
  const StdExpansion unit = expand_product({}, {5, 6, 7, 8});
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_TRUE(unit.begin()->first.empty());
}

TEST(Straighten, StandardMonomialsWithContent) {
  const auto gammas = catalog::spin8_gammas();
  const auto content = content_of(gammas[0].tableau.rows, 4);
  const auto mons = standard_monomials_with_content(4, {5, 6, 7, 8}, content);
  EXPECT_EQ(mons.size(), 3u);
  for (const auto& m : mons) EXPECT_EQ(content_of(m, 4), content);
}

TEST(Straighten, JsonRoundTrip) {
  const StdExpansion e = straighten_pair({1, 4, 6, 7}, {2, 3, 5, 8}, 4);
  EXPECT_EQ(expansion_from_json(to_json(e)), e);
  EXPECT_THROW(expansion_from_json(nlohmann::json::array({nlohmann::json{{"rows", 1}}})), Error);
}
