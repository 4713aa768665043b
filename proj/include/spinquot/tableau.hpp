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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "spinquot/weyl.hpp"

namespace spinquot {

enum class Shape { OmegaN, OmegaOne };

// OmegaN tableaux store rows (degree k <-> 2k rows of length n);
// OmegaOne tableaux store a single column (degree k <-> 4k entries).
struct Tableau {
  int n = 0;
  Shape shape = Shape::OmegaN;
  GroupType type = GroupType::D;
  std::vector<IndexVector> rows;
  std::vector<int> entries;

  int degree() const;
  auto operator<=>(const Tableau&) const = default;
};

Tableau make_omega_n(int n, std::vector<IndexVector> rows);
Tableau make_omega_one(GroupType type, int n, std::vector<int> entries);

bool is_standard(const Tableau& t);
// Spin row conditions (OmegaN) or trivial pairs plus exclusions (OmegaOne).
bool satisfies_shape_conditions(const Tableau& t);

std::map<int, int> weight_counter(const Tableau& t);
WeightVector weight(const Tableau& t);
bool is_t_invariant(const Tableau& t);

std::vector<Tableau> enumerate_basis_omega_n(int n, const IndexVector& w, int k);
std::vector<Tableau> enumerate_basis_omega_1(GroupType type, int n, int k);

// Split into a factor of degree <= d and its complement, both standard
// and T-invariant. Factor degrees are multiples of `step`.
std::optional<std::pair<Tableau, Tableau>> find_factor(const Tableau& t, int d, int step = 1);

// Merged, sorted product of two tableaux of the same kind.
Tableau multiply(const Tableau& a, const Tableau& b);

std::string to_text(const Tableau& t);
Tableau tableau_from_text(const std::string& text, GroupType type = GroupType::D);
nlohmann::json to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

}  // namespace spinquot
