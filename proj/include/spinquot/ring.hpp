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
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "spinquot/straighten.hpp"
#include "spinquot/tableau.hpp"
#include "spinquot/weyl.hpp"

namespace spinquot {

enum class RingKind { OmegaN, OmegaOne };

// Graded ring R = sum_k R_k of T-invariant sections. With step s, R_k is
// spanned by the standard monomials of tableau degree s * k.
struct RingSpec {
  RingKind kind = RingKind::OmegaN;
  int n = 4;
  IndexVector w;                  // OmegaN only
  GroupType type = GroupType::D;  // OmegaOne only
  int max_degree = 4;
  int step = 1;
};

RingSpec omega_n_spec(int n, IndexVector w, int max_degree = 4, int step = 1);
RingSpec omega_one_spec(GroupType type, int n, int max_degree = 4);
void validate(const RingSpec& spec);

// Standard basis of R_k.
std::vector<Tableau> ring_basis(const RingSpec& spec, int k);
std::vector<std::size_t> hilbert(const RingSpec& spec);

struct DegreeReport {
  int k = 0;
  std::size_t dim = 0;
  std::size_t span = 0;
  bool surjective = false;
  bool exact = false;  // true when the rank was confirmed over Q
};

struct GenerationReport {
  int d = 0;
  std::vector<Tableau> generators;
  std::vector<DegreeReport> per_degree;
  bool surjective() const;
};

// Generators default to the full standard basis of R_1..R_d.
GenerationReport check_generation(const RingSpec& spec, int d,
                                  const std::optional<std::vector<Tableau>>& generators = std::nullopt);

struct RelationSpace {
  int k = 0;
  std::vector<Tableau> generators;
  // Distinct formal products of total degree k, as indices into generators.
  std::vector<std::vector<std::size_t>> products;
  // Reduced basis of the kernel: product index -> coefficient.
  std::vector<std::map<std::size_t, Rational>> kernel;
  // OmegaN only: each relation keyed by the merged rows of its products.
  std::vector<StdExpansion> expansions() const;
};

// R_1 basis plus the indecomposable standard monomials of degrees 2..k.
std::vector<Tableau> relation_generators(const RingSpec& spec, int k);
RelationSpace relations_in_degree(const RingSpec& spec, int k,
                                  const std::optional<std::vector<Tableau>>& generators = std::nullopt);

std::vector<std::size_t> veronese_hilbert(int m, int e, int max_degree);
std::optional<std::pair<int, int>> identify_projective_space(const std::vector<std::size_t>& h);

struct SemistableReport {
  std::optional<int> degree;
  DominanceVerdict verdict;
};
SemistableReport has_semistable(const RingSpec& spec);

nlohmann::json to_json(const RingSpec& spec);
nlohmann::json to_json(const GenerationReport& r);
nlohmann::json to_json(const RelationSpace& r);

}  // namespace spinquot
