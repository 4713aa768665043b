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
#include <random>

#include "spinquot/errors.hpp"
#include "spinquot/rewrite.hpp"

using namespace spinquot;

namespace {

ReductionSystem broken_system() {
  ReductionSystem sys = preset("veronese-2-2");
  for (auto& r : sys.rules)
    if (r.lhs == VarMonomial{3, 4}) r.rhs = {2, 6};
  sys.name = "broken";
  return sys;
}

}  // namespace

TEST(Rewrite, Presets) {
  EXPECT_EQ(preset_names(), (std::vector<std::string>{"veronese-1-2", "veronese-2-2", "veronese-3-2"}));
  EXPECT_EQ(preset("veronese-1-2").rules.size(), 1u);
  EXPECT_EQ(preset("veronese-2-2").rules.size(), 6u);
  EXPECT_EQ(preset("veronese-3-2").rules.size(), 20u);
  EXPECT_EQ(preset("veronese-1-2").first_var, 0);
  EXPECT_EQ(preset("veronese-3-2").nvars, 10);
  EXPECT_THROW(preset("nope"), Error);
  for (const auto& name : preset_names()) EXPECT_NO_THROW(validate(preset(name)));
}

TEST(Rewrite, RhsReducibleWarning) {
  const ReductionSystem s = preset("veronese-3-2");
  const auto bad = s.rhs_reducible();
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(s.rules[bad[0]].lhs, (VarMonomial{5, 10}));
  EXPECT_EQ(s.rules[bad[0]].rhs, (VarMonomial{6, 9}));
  EXPECT_TRUE(preset("veronese-2-2").rhs_reducible().empty());
}

TEST(Rewrite, NormalForms) {
  const ReductionSystem s1 = preset("veronese-1-2");
  EXPECT_EQ(normal_form({0, 2}, s1), (VarMonomial{1, 1}));
  EXPECT_EQ(normal_form({0, 0, 2, 2}, s1), (VarMonomial{1, 1, 1, 1}));
  const ReductionSystem s3 = preset("veronese-3-2");
  const Reduction r = reduce({5, 10}, s3);
  EXPECT_EQ(r.result, (VarMonomial{7, 8}));
  EXPECT_EQ(r.steps.size(), 2u);
  EXPECT_TRUE(is_normal({7, 8}, s3));
  EXPECT_FALSE(is_normal({1, 2, 7}, s3));
  EXPECT_TRUE(divides({1, 1}, {1, 1, 3}));
  EXPECT_FALSE(divides({1, 1}, {1, 2, 3}));
}

TEST(Rewrite, OverlapLists) {
  EXPECT_TRUE(overlaps(preset("veronese-1-2")).empty());
  EXPECT_EQ(overlaps(preset("veronese-2-2")),
            (std::vector<VarMonomial>{{1, 2, 3}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {2, 3, 4}, {2, 3, 5}}));
  const std::vector<VarMonomial> listed{
      {1, 2, 3},  {1, 2, 4}, {1, 2, 6}, {1, 2, 7},  {1, 2, 8},  {1, 2, 9},  {1, 2, 10}, {1, 3, 4},  {1, 3, 5},
      {1, 3, 7},  {1, 3, 8}, {1, 3, 9}, {1, 3, 10}, {1, 4, 5},  {1, 4, 6},  {1, 4, 8},  {1, 4, 9},  {1, 4, 10},
      {1, 5, 10}, {1, 6, 9}, {1, 8, 9}, {1, 8, 10}, {1, 9, 10}, {2, 3, 4},  {2, 3, 5},  {2, 3, 6},  {2, 3, 7},
      {2, 3, 9},  {2, 3, 10}, {2, 4, 5}, {2, 4, 6}, {2, 4, 7},  {2, 4, 8},  {2, 4, 10}, {2, 5, 10}, {2, 6, 7},
      {2, 6, 9},  {2, 6, 10}, {2, 7, 10}, {3, 4, 5}, {3, 4, 6}, {3, 4, 7},  {3, 4, 8},  {3, 4, 9},  {3, 5, 7},
      {3, 5, 9},  {3, 5, 10}, {3, 6, 9}, {3, 7, 9}, {4, 5, 6},  {4, 5, 8},  {4, 5, 10}, {4, 6, 8},  {4, 6, 9}};
  ASSERT_EQ(listed.size(), 54u);
  EXPECT_EQ(overlaps(preset("veronese-3-2")), listed);
}

TEST(Rewrite, PresetsAreConfluent) {
  for (const auto& name : preset_names()) {
    const ConfluenceReport r = check_confluence(preset(name));
    EXPECT_TRUE(r.confluent) << name;
    for (const auto& a : r.ambiguities) {
      EXPECT_TRUE(a.resolved);
      EXPECT_GE(a.resolutions.size(), 2u);
      for (const auto& red : a.resolutions) EXPECT_EQ(red.result, a.resolutions.front().result);
    }
  }
  EXPECT_EQ(check_confluence(preset("veronese-1-2")).extra_checks.size(), 4u);
}

TEST(Rewrite, BrokenSystemIsDetected) {
  const ReductionSystem b = broken_system();
  const ConfluenceReport r = check_confluence(b);
  EXPECT_FALSE(r.confluent);
  const auto it = std::find_if(r.ambiguities.begin(), r.ambiguities.end(),
                               [](const Ambiguity& a) { return a.monomial == VarMonomial{1, 2, 3}; });
  ASSERT_NE(it, r.ambiguities.end());
  EXPECT_FALSE(it->resolved);
  try {
    normal_form_count(b, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotConfluent);
  }
}

TEST(Rewrite, NormalFormCounts) {
  const std::vector<std::pair<std::string, std::vector<std::size_t>>> expected{
      {"veronese-1-2", {1, 3, 5, 7, 9}}, {"veronese-2-2", {1, 6, 15, 28, 45}}, {"veronese-3-2", {1, 10, 35, 84, 165}}};
  for (const auto& [name, counts] : expected)
    for (int k = 0; k < 5; ++k) EXPECT_EQ(normal_form_count(preset(name), k), counts[k]) << name << " k=" << k;
}

TEST(Rewrite, NormalFormIsIdempotentAndOrderIndependent) {
  std::mt19937_64 rng(31);
  for (const auto& name : preset_names()) {
    const ReductionSystem s = preset(name);
    const auto mons = monomials_of_degree(s, 4);
    for (const auto& m : mons) {
      const VarMonomial nf = normal_form(m, s);
      EXPECT_TRUE(is_normal(nf, s));
      EXPECT_EQ(normal_form(nf, s), nf);
    }
    for (int trial = 0; trial < 200; ++trial) {
      const VarMonomial& m = mons[rng() % mons.size()];
      EXPECT_EQ(reduce(m, s, &rng).result, normal_form(m, s));
      ReductionSystem shuffled = s;
      std::shuffle(shuffled.rules.begin(), shuffled.rules.end(), rng);
      EXPECT_EQ(normal_form(m, shuffled), normal_form(m, s));
    }
  }
}

TEST(Rewrite, CyclicSystemRunsOutOfFuel) {
  const ReductionSystem c = parse_system("z1 z2 -> z3^2\nz3^2 -> z1 z2\n", "cyclic");
  try {
    normal_form({1, 2}, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FuelExhausted);
  }
}

TEST(Rewrite, ParseAndFormat) {
  EXPECT_EQ(parse_monomial("z_4^2"), (VarMonomial{4, 4}));
  EXPECT_EQ(parse_monomial("z3*z_{1}"), (VarMonomial{1, 3}));
  EXPECT_EQ(parse_monomial("z_2 z_10"), (VarMonomial{2, 10}));
  EXPECT_EQ(format_monomial({4, 4}), "z_4^2");
  EXPECT_EQ(format_monomial({}), "1");
  EXPECT_THROW(parse_monomial("x_1"), Error);
  EXPECT_THROW(parse_system("z1 z2 z3\n"), Error);
  EXPECT_THROW(parse_system("z1 -> z2 z3\n"), Error);
  EXPECT_THROW(parse_system("z1 z2 -> z3 z3\nz2 z1 -> z4 z4\n"), Error);
  EXPECT_THROW(parse_system("# only a comment\n"), Error);
  for (const auto& name : preset_names()) {
    const ReductionSystem s = preset(name);
    const ReductionSystem t = parse_system(to_text(s), name);
    ASSERT_EQ(t.rules.size(), s.rules.size());
    for (std::size_t i = 0; i < s.rules.size(); ++i) {
      EXPECT_EQ(t.rules[i].lhs, s.rules[i].lhs);
      EXPECT_EQ(t.rules[i].rhs, s.rules[i].rhs);
    }
    const ReductionSystem u = system_from_json(to_json(s));
    EXPECT_EQ(u.first_var, s.first_var);
    EXPECT_EQ(u.nvars, s.nvars);
    EXPECT_EQ(u.bindings, s.bindings);
    EXPECT_EQ(to_json(u), to_json(s));
  }
}

TEST(Rewrite, ReportJson) {
  const ReductionSystem s = preset("veronese-2-2");
  const auto j = to_json(check_confluence(s), s);
  EXPECT_EQ(j.at("confluent"), true);
  EXPECT_EQ(j.at("ambiguities").size(), 7u);
  const auto r = to_json(reduce({1, 2, 3}, s), s);
  EXPECT_TRUE(r.contains("steps"));
}
