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
#include <random>
#include <vector>

#include "json.hpp"
#include "spinquot/rational.hpp"
#include "spinquot/weyl.hpp"

namespace spinquot {

// Sorted subset of 1..n.
using SubsetIndex = std::vector<int>;

// Skew-symmetric n x n matrix; only the upper triangle is stored by callers.
class SkewPoint {
 public:
  SkewPoint() = default;
  explicit SkewPoint(int n);

  int size() const { return n_; }
  // 1-based; at(j, i) == -at(i, j).
  const Rational& at(int i, int j) const { return m_[(i - 1) * n_ + (j - 1)]; }
  void set(int i, int j, const Rational& v);

 private:
  int n_ = 0;
  std::vector<Rational> m_;
};

struct PfaffianTerm {
  int sign = 1;
  SubsetIndex left, right;
};

struct PfaffianRelation {
  std::vector<PfaffianTerm> terms;
};

struct DualPair {
  SubsetIndex aset, bset;
};

Rational pfaffian(const SkewPoint& a);
Rational sub_pfaffian(const SkewPoint& a, const SubsetIndex& subset);
// Sum over perfect matchings with crossing signs.
Rational pfaffian_by_matchings(const SkewPoint& a, const SubsetIndex& subset);
// Pf(A(S)) for every S, indexed by bitmask (bit i-1 <-> i); n <= 20.
std::vector<Rational> all_sub_pfaffians(const SkewPoint& a);

DualPair dual_pair(const IndexVector& index, int n);
IndexVector index_from_bset(const SubsetIndex& bset, int n);
Rational q_eval(const IndexVector& index, const SkewPoint& a);

// Dress-Wenzel exchange identity for odd I1, I2:
//   sum_t (-1)^t P(I1 ^ {i_t}) P(I2 ^ {i_t}) = 0.
PfaffianRelation exchange_terms(const SubsetIndex& i1, const SubsetIndex& i2);
Rational evaluate(const PfaffianRelation& rel, const SkewPoint& a);

SkewPoint random_skew_point(int n, std::mt19937_64& rng, long lo = 1, long hi = 1000000);

nlohmann::json to_json(const SkewPoint& p);
SkewPoint skew_point_from_json(const nlohmann::json& j);

}  // namespace spinquot
