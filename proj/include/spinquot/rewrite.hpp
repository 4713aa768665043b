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

#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace spinquot {

// Commutative monomial in z_first..z_{first+nvars-1}: sorted variable indices.
using VarMonomial = std::vector<int>;

struct Rule {
  VarMonomial lhs;  // degree 2
  VarMonomial rhs;  // degree 2
};

struct ReductionSystem {
  std::string name;
  int first_var = 1;
  int nvars = 0;
  std::vector<Rule> rules;
  // z_i -> expression in ring generators, e.g. "X1*X2".
  std::map<int, std::string> bindings;

  std::vector<int> vars() const;
  // Indices of rules whose rhs is divisible by some lhs.
  std::vector<std::size_t> rhs_reducible() const;
};

void validate(const ReductionSystem& sys);
bool divides(const VarMonomial& a, const VarMonomial& m);
bool is_normal(const VarMonomial& m, const ReductionSystem& sys);

struct RewriteStep {
  std::size_t rule = 0;
  VarMonomial result;
};

struct Reduction {
  VarMonomial start;
  VarMonomial result;
  std::vector<RewriteStep> steps;
};

inline constexpr std::size_t kRewriteFuel = 1000;

// Applies the first applicable rule until none applies. With `rng`, picks a
// uniformly random applicable rule instead.
Reduction reduce(const VarMonomial& m, const ReductionSystem& sys, std::mt19937_64* rng = nullptr,
                 std::size_t fuel = kRewriteFuel);
VarMonomial normal_form(const VarMonomial& m, const ReductionSystem& sys);

// Degree-3 monomials divisible by at least two distinct lhs, sorted.
std::vector<VarMonomial> overlaps(const ReductionSystem& sys);

struct Ambiguity {
  VarMonomial monomial;
  // One reduction per applicable first rule; steps[0] is that rule.
  std::vector<Reduction> resolutions;
  bool resolved = false;
};

struct ConfluenceReport {
  std::vector<Ambiguity> ambiguities;
  // lhs * z_v and lhs^2 for every rule, including single-rule cases.
  std::vector<Ambiguity> extra_checks;
  bool confluent = false;
};

Ambiguity resolve(const VarMonomial& m, const ReductionSystem& sys);
ConfluenceReport check_confluence(const ReductionSystem& sys);

std::vector<VarMonomial> monomials_of_degree(const ReductionSystem& sys, int k);
std::vector<VarMonomial> normal_monomials(const ReductionSystem& sys, int k);
std::size_t normal_form_count(const ReductionSystem& sys, int k);

std::string format_monomial(const VarMonomial& m);
// "z_1 z_2 -> z_5 z_5", also accepting "z1*z2" and "z_5^2".
VarMonomial parse_monomial(const std::string& text);
ReductionSystem parse_system(const std::string& text, const std::string& name = "custom");
std::string to_text(const ReductionSystem& sys);
nlohmann::json to_json(const ReductionSystem& sys);
ReductionSystem system_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Reduction& r, const ReductionSystem& sys);
nlohmann::json to_json(const ConfluenceReport& r, const ReductionSystem& sys);

std::vector<std::string> preset_names();
ReductionSystem preset(const std::string& name);

}  // namespace spinquot
