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

#include <functional>
#include <set>

#include "spinquot/catalog.hpp"
#include "spinquot/errors.hpp"
#include "spinquot/tableau.hpp"

using namespace spinquot;

namespace {

// Every multiset of 2k rows below w, kept when it is a Bruhat chain with
// balanced content. No pruning.
std::set<Tableau> brute_force_basis(int n, const IndexVector& w, int k) {
  std::vector<IndexVector> allowed;
  for (const auto& r : minimal_coset_reps_alpha_n(n))
    if (bruhat_leq(r, w)) allowed.push_back(r);
  std::set<Tableau> out;
  std::vector<IndexVector> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == 2 * k) {
      Tableau t = make_omega_n(n, pick);
      if (is_standard(t) && is_t_invariant(t)) out.insert(t);
      return;
    }
    for (std::size_t i = from; i < allowed.size(); ++i) {
      pick.push_back(allowed[i]);
      rec(i);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

IndexVector top(int n) {
  IndexVector v;
  for (int i = n + 1; i <= 2 * n; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST(Tableau, GammaTableauxAreStandardAndInvariant) {
  const auto gammas = catalog::spin8_gammas();
  ASSERT_EQ(gammas.size(), 4u);
  for (const auto& g : gammas) {
    EXPECT_EQ(g.tableau.degree(), 1);
    EXPECT_EQ(is_standard(g.tableau), g.name != "Gamma4") << g.name;
    EXPECT_TRUE(is_t_invariant(g.tableau)) << g.name;
    EXPECT_TRUE(satisfies_shape_conditions(g.tableau)) << g.name;
    EXPECT_EQ(weight(g.tableau).coeffs, std::vector<Rational>(4, Rational(0)));
  }
}

TEST(Tableau, WeightOfSingleRow) {
  const Tableau t = make_omega_n(4, {{1, 2, 3, 4}});
  EXPECT_EQ(weight(t).coeffs, std::vector<Rational>(4, Rational(1, 2)));
  EXPECT_FALSE(is_t_invariant(t));
  EXPECT_THROW(weight_counter(make_omega_n(2, {{1, 5}})), Error);
}

TEST(Tableau, StandardnessChecks) {
  EXPECT_TRUE(is_standard(make_omega_n(4, {{1, 2, 3, 4}, {5, 6, 7, 8}})));
  EXPECT_FALSE(is_standard(make_omega_n(4, {{5, 6, 7, 8}, {1, 2, 3, 4}})));
  EXPECT_FALSE(is_standard(make_omega_n(4, {{2, 1, 3, 4}})));
  EXPECT_THROW(is_standard(make_omega_n(4, {{1, 2, 3}})), Error);
  EXPECT_FALSE(satisfies_shape_conditions(make_omega_n(4, {{1, 2, 3, 5}})));
  EXPECT_FALSE(satisfies_shape_conditions(make_omega_n(4, {{1, 2, 3, 8}})));
}

TEST(Tableau, Spin8Counts) {
  const std::vector<std::size_t> full{3, 6, 10, 15};
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(enumerate_basis_omega_n(4, top(4), k).size(), full[k - 1]);
  for (int k = 1; k <= 4; ++k)
    EXPECT_EQ(enumerate_basis_omega_n(4, {3, 4, 7, 8}, k).size(), static_cast<std::size_t>(k + 1));
  EXPECT_TRUE(enumerate_basis_omega_n(4, {1, 2, 3, 4}, 3).empty());
}

TEST(Tableau, EnumerationRejectsBadIndex) {
  EXPECT_THROW(enumerate_basis_omega_n(4, {1, 2, 3, 5}, 1), Error);
  EXPECT_THROW(enumerate_basis_omega_n(4, {1, 2, 3, 8}, 1), Error);
}

TEST(Tableau, EnumerationMatchesBruteForce) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& w : minimal_coset_reps_alpha_n(n)) {
      for (int k = 1; k <= 3; ++k) {
        const auto fast = enumerate_basis_omega_n(n, w, k);
        const std::set<Tableau> fast_set(fast.begin(), fast.end());
        EXPECT_EQ(fast.size(), fast_set.size());
        EXPECT_EQ(fast_set, brute_force_basis(n, w, k)) << "n=" << n << " w=" << format_int_list(w) << " k=" << k;
      }
    }
  }
}

TEST(Tableau, EnumerationIsMonotoneInW) {
  const auto reps = minimal_coset_reps_alpha_n(5);
  for (const auto& u : reps)
    for (const auto& v : reps)
      if (bruhat_leq(u, v)) {
        EXPECT_LE(enumerate_basis_omega_n(5, u, 2).size(), enumerate_basis_omega_n(5, v, 2).size());
      }
}

TEST(Tableau, OmegaOneCounts) {
  // Multisets of k pairs: Binomial(p + k - 1, k), p = n - 1 (type D) or n (type C).
  EXPECT_EQ(enumerate_basis_omega_1(GroupType::D, 4, 1).size(), 3u);
  EXPECT_EQ(enumerate_basis_omega_1(GroupType::D, 4, 2).size(), 6u);
  EXPECT_EQ(enumerate_basis_omega_1(GroupType::C, 2, 1).size(), 2u);
  EXPECT_EQ(enumerate_basis_omega_1(GroupType::C, 2, 2).size(), 3u);
  EXPECT_EQ(enumerate_basis_omega_1(GroupType::C, 3, 2).size(), 6u);
  for (const auto& t : enumerate_basis_omega_1(GroupType::D, 5, 2)) {
    EXPECT_TRUE(is_standard(t));
    EXPECT_TRUE(is_t_invariant(t));
    EXPECT_TRUE(satisfies_shape_conditions(t));
    for (int x : t.entries) EXPECT_TRUE(x != 5 && x != 6);
  }
  EXPECT_THROW(enumerate_basis_omega_1(GroupType::D, 3, 1), Error);
  EXPECT_THROW(enumerate_basis_omega_1(GroupType::C, 1, 1), Error);
}

TEST(Tableau, FindFactorProducesValidSplits) {
  const IndexVector w6 = catalog::spin8n_schubert(2)[5];
  for (int k = 2; k <= 3; ++k) {
    for (const auto& t : enumerate_basis_omega_n(8, w6, k)) {
      const auto f = find_factor(t, k - 1);
      if (!f) continue;
      EXPECT_TRUE(is_standard(f->first) && is_standard(f->second));
      EXPECT_TRUE(is_t_invariant(f->first) && is_t_invariant(f->second));
      EXPECT_GE(f->first.degree(), 1);
      EXPECT_EQ(f->first.degree() + f->second.degree(), k);
      EXPECT_EQ(multiply(f->first, f->second), t);
    }
  }
  const auto z1 = catalog::find(catalog::spin8n_tableaux(2), "Z1");
  EXPECT_FALSE(find_factor(z1, 2).has_value());
  const auto whole = find_factor(z1, 3);
  ASSERT_TRUE(whole.has_value());
  EXPECT_EQ(whole->first, z1);
  EXPECT_EQ(whole->second.degree(), 0);
}

TEST(Tableau, FindFactorRespectsStep) {
  const IndexVector w4 = catalog::spin8n_schubert(2)[3];
  for (const auto& t : enumerate_basis_omega_n(8, w4, 4)) {
    const auto f = find_factor(t, 3, 2);
    if (f) {
      EXPECT_EQ(f->first.degree() % 2, 0);
    }
  }
}

TEST(Tableau, MultiplyOmegaOne) {
  const Tableau a = make_omega_one(GroupType::C, 3, {2, 2, 5, 5});
  const Tableau b = make_omega_one(GroupType::C, 3, {1, 1, 6, 6});
  EXPECT_EQ(multiply(a, b).entries, (std::vector<int>{1, 1, 2, 2, 5, 5, 6, 6}));
  EXPECT_THROW(multiply(a, make_omega_n(3, {})), Error);
}

TEST(Tableau, TextAndJsonRoundTrip) {
  for (const auto& g : catalog::spin8n_tableaux(2)) {
    EXPECT_EQ(tableau_from_text(to_text(g.tableau)), g.tableau);
    EXPECT_EQ(tableau_from_json(to_json(g.tableau)), g.tableau);
  }
  const Tableau c = make_omega_one(GroupType::C, 3, {1, 1, 6, 6});
  EXPECT_EQ(tableau_from_text(to_text(c)), c);
  EXPECT_EQ(tableau_from_json(to_json(c)), c);
  EXPECT_THROW(tableau_from_text(""), Error);
  EXPECT_THROW(tableau_from_text("k=1\n1,2\n"), Error);
  EXPECT_THROW(tableau_from_text("n=2\n1,2,3\n"), Error);
  EXPECT_THROW(tableau_from_json(nlohmann::json{{"n", 2}}), Error);
}
