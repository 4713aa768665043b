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

#include "spinquot/linalg.hpp"

#include <utility>

namespace spinquot {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv_pivot = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv_pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

Matrix nullspace(Matrix a, std::size_t ncols) {
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  return add(lo, hi);
}

std::uint64_t inv(std::uint64_t a) {
  std::uint64_t result = 1, base = a, e = kPrime - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce(const Integer& z) {
  static const Integer p(std::to_string(kPrime));
  Integer r = z % p;
  if (sgn(r) < 0) r += p;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

std::optional<std::uint64_t> reduce(const Rational& q) {
  std::uint64_t d = reduce(q.get_den());
  if (d == 0) return std::nullopt;
  return mul(reduce(q.get_num()), inv(d));
}

std::optional<Rational> reconstruct(std::uint64_t a) {
  // Extended Euclid stopped at sqrt(p/2).
  const unsigned __int128 bound = 1518500249ULL;  // floor(sqrt(2^61 / 2))
  __int128 r0 = kPrime, r1 = a, t0 = 0, t1 = 1;
  while (r1 > static_cast<__int128>(bound)) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    __int128 t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  __int128 abs_t = t1 < 0 ? -t1 : t1;
  if (abs_t > static_cast<__int128>(bound)) return std::nullopt;
  Rational q(Integer(std::to_string(static_cast<long long>(r1))),
             Integer(std::to_string(static_cast<long long>(t1))));
  q.canonicalize();
  return q;
}

std::size_t rank(ModMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const std::uint64_t iv = inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = mul(m[r][j], iv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = sub(m[i][j], mul(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

Solver::Solver(const ModMatrix& a) {
  if (a.empty()) return;
  cols_ = a[0].size();
  // Greedily pick independent rows, tracking the span in echelon form.
  ModMatrix echelon;
  std::vector<std::size_t> lead;
  for (std::size_t i = 0; i < a.size() && rows_.size() < cols_; ++i) {
    auto v = a[i];
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const std::uint64_t f = v[lead[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) v[j] = sub(v[j], mul(f, echelon[k][j]));
    }
    std::size_t c = 0;
    while (c < cols_ && v[c] == 0) ++c;
    if (c == cols_) continue;
    const std::uint64_t iv = inv(v[c]);
    for (auto& x : v) x = mul(x, iv);
    echelon.push_back(std::move(v));
    lead.push_back(c);
    rows_.push_back(i);
  }
  full_ = rows_.size() == cols_;
  if (!full_) return;
  // Invert the selected square block by Gauss-Jordan.
  const std::size_t n = cols_;
  ModMatrix aug(n, std::vector<std::uint64_t>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[rows_[i]][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    const std::uint64_t iv = inv(aug[c][c]);
    for (auto& x : aug[c]) x = mul(x, iv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const std::uint64_t f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] = sub(aug[i][j], mul(f, aug[c][j]));
    }
  }
  inverse_.assign(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inverse_[i][j] = aug[i][n + j];
}

std::vector<std::uint64_t> Solver::solve(const std::vector<std::uint64_t>& b) const {
  std::vector<std::uint64_t> x(cols_, 0);
  for (std::size_t i = 0; i < cols_; ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s = add(s, mul(inverse_[i][j], b[rows_[j]]));
    x[i] = s;
  }
  return x;
}

}  // namespace modp

}  // namespace spinquot
