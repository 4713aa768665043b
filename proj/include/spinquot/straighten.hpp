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

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "json.hpp"
#include "spinquot/linalg.hpp"
#include "spinquot/pfaffian.hpp"
#include "spinquot/tableau.hpp"

namespace spinquot {

// Multiset of Pfaffian-coordinate rows, kept sorted.
using Monomial = std::vector<IndexVector>;
using StdExpansion = std::map<Monomial, Rational>;

bool is_pfaffian_index(const IndexVector& row, int n);
bool is_standard_monomial(const Monomial& m);
Monomial monomial_of(const std::vector<Tableau>& factors);

struct StraightenStats {
  std::size_t greedy_steps = 0;
  std::size_t class_solves = 0;
  std::size_t monomial_steps = 0;
  int max_depth = 0;
};

class Straightener {
 public:
  explicit Straightener(int n);

  int rank() const { return n_; }
  int fuel() const { return fuel_; }
  // Quadratic straightening over the whole orthogonal Grassmannian.
  const StdExpansion& straighten_pair(const IndexVector& a, const IndexVector& b);
  // Drops every intermediate term with a row not <= *w when w is given.
  StdExpansion straighten(const Monomial& m, const IndexVector* w = nullptr);
  StdExpansion straighten(const StdExpansion& e, const IndexVector* w = nullptr);
  const StraightenStats& stats() const { return stats_; }

 private:
  using Pair = std::pair<IndexVector, IndexVector>;
  const StdExpansion& pair_rec(const Pair& p, int depth);
  bool try_greedy(const Pair& p, int depth);
  void solve_class(const Pair& p);
  std::vector<std::map<Pair, int>> relations_of(const Pair& p) const;

  int n_;
  int fuel_;
  std::map<Pair, StdExpansion> cache_;
  StraightenStats stats_;
};

StdExpansion straighten_pair(const IndexVector& a, const IndexVector& b, int n);
StdExpansion restrict(const StdExpansion& e, const IndexVector& w);

// Standard monomials of rows <= w whose entry counts equal `content` (index t).
std::vector<Monomial> standard_monomials_with_content(int n, const IndexVector& w, const std::vector<int>& content);
std::vector<int> content_of(const Monomial& m, int n);

// Random points of the Schubert cell of w, in the skew chart of the opposite cell.
class SchubertSampler {
 public:
  SchubertSampler(int n, IndexVector w, std::uint64_t seed, long param_range = 20);
  SkewPoint sample();

 private:
  int n_;
  IndexVector w_;
  std::mt19937_64 rng_;
  long range_;
};

class Interpolator {
 public:
  Interpolator(int n, IndexVector w, std::uint64_t seed, int extra_points = 4);
  StdExpansion expand(const Monomial& m);

 private:
  struct Block {
    std::vector<Monomial> basis;
    std::vector<std::vector<Integer>> eval;
    modp::ModMatrix eval_mod;
    std::unique_ptr<modp::Solver> solver;
  };
  Block& block_for(const std::vector<int>& content, std::size_t rows);
  void ensure_points(std::size_t count);
  Integer value(const Monomial& m, std::size_t point) const;

  int n_;
  IndexVector w_;
  int extra_;
  SchubertSampler sampler_;
  std::vector<IndexVector> rows_;
  std::vector<std::map<IndexVector, Integer>> points_;
  std::map<std::vector<int>, Block> blocks_;
};

enum class ExpandMethod { Symbolic, Interpolation, Both };

struct ExpandOptions {
  ExpandMethod method = ExpandMethod::Both;
  std::uint64_t seed = 1;
};

StdExpansion expand_product(const std::vector<Tableau>& factors, const IndexVector& w, const ExpandOptions& opts = {});

nlohmann::json to_json(const StdExpansion& e);
StdExpansion expansion_from_json(const nlohmann::json& j);

}  // namespace spinquot
