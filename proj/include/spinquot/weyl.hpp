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

#include <string>
#include <vector>

#include "spinquot/rational.hpp"

namespace spinquot {

enum class GroupType { D, C };

// Strictly increasing tuple in 1..2n.
using IndexVector = std::vector<int>;

// Signed permutation of 1..2n in one-line notation.
struct WeylElement {
  int n = 0;
  GroupType type = GroupType::D;
  std::vector<int> one_line;

  // First n entries, sorted: the image of the element in I_{n,2n}.
  IndexVector schubert_index() const;
  bool operator==(const WeylElement&) const = default;
};

struct WeightVector {
  std::vector<Rational> coeffs;
  bool operator==(const WeightVector&) const = default;
};

WeylElement identity_element(int n, GroupType type);
WeylElement parse_one_line(const std::vector<int>& seq, GroupType type, int n);
// Minimal coset representative for P^{alpha_n} with the given index.
WeylElement element_from_index(const IndexVector& index, GroupType type, int n);

int apply_simple_reflection(int s, int value, GroupType type, int n);
WeylElement left_multiply(int s, const WeylElement& w);
WeylElement word_to_one_line(const std::vector<int>& word, GroupType type, int n);

std::vector<IndexVector> minimal_coset_reps_alpha_n(int n);
bool bruhat_leq(const IndexVector& u, const IndexVector& v);

int inversion_count(const std::vector<int>& perm);
int negative_count(const WeylElement& w);
int length(const WeylElement& w);
// Greedy left-descent word; word_to_one_line(reduced_word(w)) == w.
std::vector<int> reduced_word(const WeylElement& w);

WeightVector apply_to_weight(const WeylElement& w, const WeightVector& lambda);
WeightVector two_omega_n(int n);
WeightVector two_omega_1(int n);

struct DominanceVerdict {
  bool nonpositive = false;
  // Coefficients of -mu in the simple roots.
  std::vector<Rational> coefficients;
  std::string diagnostic;
};
DominanceVerdict dominance(const WeightVector& mu, GroupType type);
bool is_dominant_nonpositive(const WeightVector& mu, GroupType type);

std::vector<int> parse_int_list(const std::string& text);
std::string format_int_list(const std::vector<int>& v, const char* sep = ",");

}  // namespace spinquot
