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

#include "spinquot/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "spinquot/errors.hpp"

namespace spinquot {

IndexVector WeylElement::schubert_index() const {
  IndexVector idx(one_line.begin(), one_line.begin() + n);
  std::sort(idx.begin(), idx.end());
  return idx;
}

WeylElement identity_element(int n, GroupType type) {
  WeylElement w{n, type, std::vector<int>(2 * n)};
  for (int i = 0; i < 2 * n; ++i) w.one_line[i] = i + 1;
  return w;
}

int negative_count(const WeylElement& w) {
  int m = 0;
  for (int i = 0; i < w.n; ++i)
    if (w.one_line[i] > w.n) ++m;
  return m;
}

WeylElement parse_one_line(const std::vector<int>& seq, GroupType type, int n) {
  const int size = 2 * n;
  if (n < 1 || static_cast<int>(seq.size()) != size)
    throw Error(Errc::NotPermutation, "expected " + std::to_string(size) + " entries");
  std::vector<bool> seen(size + 1, false);
  for (int a : seq) {
    if (a < 1 || a > size || seen[a]) throw Error(Errc::NotPermutation, format_int_list(seq));
    seen[a] = true;
  }
  for (int i = 0; i < size; ++i)
    if (seq[i] != size + 1 - seq[size - 1 - i])
      throw Error(Errc::SymmetryViolated, "slot " + std::to_string(i + 1));
  WeylElement w{n, type, seq};
  if (type == GroupType::D && negative_count(w) % 2 != 0)
    throw Error(Errc::OddNegativeCount, format_int_list(seq));
  return w;
}

WeylElement element_from_index(const IndexVector& index, GroupType type, int n) {
  if (static_cast<int>(index.size()) != n)
    throw Error(Errc::LengthMismatch, "index must have n entries");
  std::vector<int> seq(2 * n);
  for (int i = 0; i < n; ++i) {
    seq[i] = index[i];
    seq[2 * n - 1 - i] = 2 * n + 1 - index[i];
  }
  return parse_one_line(seq, type, n);
}

int apply_simple_reflection(int s, int value, GroupType type, int n) {
  const int m = 2 * n + 1;
  if (s < n) {
    if (value == s) return s + 1;
    if (value == s + 1) return s;
    if (value == m - s) return m - s - 1;
    if (value == m - s - 1) return m - s;
    return value;
  }
  if (type == GroupType::C) {
    if (value == n) return n + 1;
    if (value == n + 1) return n;
    return value;
  }
  // alpha_n = eps_{n-1} + eps_n
  if (value == n - 1) return n + 1;
  if (value == n) return n + 2;
  if (value == n + 1) return n - 1;
  if (value == n + 2) return n;
  return value;
}

WeylElement left_multiply(int s, const WeylElement& w) {
  WeylElement out = w;
  for (int& a : out.one_line) a = apply_simple_reflection(s, a, w.type, w.n);
  return out;
}

WeylElement word_to_one_line(const std::vector<int>& word, GroupType type, int n) {
  const int min_rank = type == GroupType::D ? 2 : 1;
  if (n < min_rank) throw Error(Errc::IndexOutOfRange, "rank too small");
  for (int s : word)
    if (s < 1 || s > n) throw Error(Errc::IndexOutOfRange, "s_" + std::to_string(s));
  WeylElement w = identity_element(n, type);
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = left_multiply(*it, w);
  return w;
}

std::vector<IndexVector> minimal_coset_reps_alpha_n(int n) {
  std::vector<IndexVector> out;
  // Choose one of {t, 2n+1-t} for each t.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    IndexVector v;
    for (int t = 1; t <= n; ++t) v.push_back((mask >> (t - 1)) & 1u ? 2 * n + 1 - t : t);
    std::sort(v.begin(), v.end());
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const IndexVector& u, const IndexVector& v) {
  if (u.size() != v.size()) throw Error(Errc::LengthMismatch, "bruhat_leq");
  for (std::size_t t = 0; t < u.size(); ++t)
    if (u[t] > v[t]) return false;
  return true;
}

int inversion_count(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv;
}

int length(const WeylElement& w) {
  const int inv = inversion_count(w.one_line);
  const int m = negative_count(w);
  return w.type == GroupType::D ? (inv - m) / 2 : (inv + m) / 2;
}

std::vector<int> reduced_word(const WeylElement& w) {
  std::vector<int> word;
  WeylElement cur = w;
  int len = length(cur);
  while (len > 0) {
    bool found = false;
    for (int s = 1; s <= cur.n && !found; ++s) {
      WeylElement next = left_multiply(s, cur);
      int l = length(next);
      if (l < len) {
        word.push_back(s);
        cur = next;
        len = l;
        found = true;
      }
    }
    if (!found) break;
  }
  return word;
}

WeightVector apply_to_weight(const WeylElement& w, const WeightVector& lambda) {
  if (static_cast<int>(lambda.coeffs.size()) != w.n) throw Error(Errc::RankMismatch, "apply_to_weight");
  WeightVector out{std::vector<Rational>(w.n, Rational(0))};
  for (int i = 0; i < w.n; ++i) {
    const int a = w.one_line[i];
    if (a <= w.n)
      out.coeffs[a - 1] += lambda.coeffs[i];
    else
      out.coeffs[2 * w.n - a] -= lambda.coeffs[i];
  }
  return out;
}

WeightVector two_omega_n(int n) { return WeightVector{std::vector<Rational>(n, Rational(1))}; }

WeightVector two_omega_1(int n) {
  WeightVector v{std::vector<Rational>(n, Rational(0))};
  v.coeffs[0] = 2;
  return v;
}

DominanceVerdict dominance(const WeightVector& mu, GroupType type) {
  const int n = static_cast<int>(mu.coeffs.size());
  DominanceVerdict out;
  if (n < 2) {
    out.diagnostic = "rank below 2";
    return out;
  }
  std::vector<Rational> partial(n);
  Rational s = 0;
  for (int k = 0; k < n; ++k) {
    s -= mu.coeffs[k];
    partial[k] = s;
  }
  std::vector<Rational> c(n);
  if (type == GroupType::D) {
    for (int k = 0; k < n - 2; ++k) c[k] = partial[k];
    const Rational nu_n = -mu.coeffs[n - 1];
    c[n - 2] = (partial[n - 2] - nu_n) / 2;
    c[n - 1] = (partial[n - 2] + nu_n) / 2;
  } else {
    for (int k = 0; k < n - 1; ++k) c[k] = partial[k];
    c[n - 1] = partial[n - 1] / 2;
  }
  out.coefficients = c;
  out.nonpositive = true;
  for (int k = 0; k < n; ++k) {
    if (c[k].get_den() != 1) {
      out.nonpositive = false;
      out.diagnostic = "non-integral coefficient at alpha_" + std::to_string(k + 1);
      break;
    }
    if (sgn(c[k]) < 0) {
      out.nonpositive = false;
      out.diagnostic = "negative coefficient at alpha_" + std::to_string(k + 1);
      break;
    }
  }
  return out;
}

bool is_dominant_nonpositive(const WeightVector& mu, GroupType type) {
  return dominance(mu, type).nonpositive;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad integer '" + token + "'");
    }
    if (used != token.size()) throw Error(Errc::ParseError, "bad integer '" + token + "'");
    out.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '(' || ch == ')' || ch == '\n')
      flush();
    else
      token.push_back(ch);
  }
  flush();
  return out;
}

std::string format_int_list(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace spinquot
