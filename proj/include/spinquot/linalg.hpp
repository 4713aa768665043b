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
#include <optional>
#include <vector>

#include "spinquot/rational.hpp"

namespace spinquot {

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
Rational determinant(Matrix m);
// Basis of the right kernel {x : a x = 0}, a has `ncols` columns.
Matrix nullspace(Matrix a, std::size_t ncols);

namespace modp {

inline constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t sub(std::uint64_t a, std::uint64_t b);
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t inv(std::uint64_t a);
std::uint64_t reduce(const Integer& z);
// nullopt when the denominator vanishes mod p.
std::optional<std::uint64_t> reduce(const Rational& q);
std::optional<Rational> reconstruct(std::uint64_t a);

using ModMatrix = std::vector<std::vector<std::uint64_t>>;
std::size_t rank(ModMatrix m);

// Least-squares-free solver for tall systems A x = b with full column rank.
class Solver {
 public:
  explicit Solver(const ModMatrix& a);
  bool full_column_rank() const { return full_; }
  std::vector<std::uint64_t> solve(const std::vector<std::uint64_t>& b) const;

 private:
  std::size_t cols_ = 0;
  bool full_ = false;
  std::vector<std::size_t> rows_;
  ModMatrix inverse_;
};

}  // namespace modp

}  // namespace spinquot
