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

#include "spinquot/pfaffian.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "spinquot/errors.hpp"

namespace spinquot {

SkewPoint::SkewPoint(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, Rational(0)) {}

void SkewPoint::set(int i, int j, const Rational& v) {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) throw Error(Errc::IndexOutOfRange, "skew entry");
  m_[(i - 1) * n_ + (j - 1)] = v;
  m_[(j - 1) * n_ + (i - 1)] = -v;
}

static void check_subset(const SubsetIndex& s, int n) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n || (i && s[i - 1] >= s[i]))
      throw Error(Errc::IndexOutOfRange, "subset " + format_int_list(s));
  }
}

Rational sub_pfaffian(const SkewPoint& a, const SubsetIndex& subset) {
  check_subset(subset, a.size());
  if (subset.size() % 2) return 0;
  if (subset.empty()) return 1;
  // First-row expansion, memoized on the remaining index set.
  std::unordered_map<std::uint64_t, Rational> memo;
  std::function<Rational(std::uint64_t)> pf = [&](std::uint64_t mask) -> Rational {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<int> idx;
    for (std::size_t i = 0; i < subset.size(); ++i)
      if (mask >> i & 1u) idx.push_back(static_cast<int>(i));
    Rational sum = 0;
    const int first = idx[0];
    for (std::size_t p = 1; p < idx.size(); ++p) {
      const Rational& entry = a.at(subset[first], subset[idx[p]]);
      if (sgn(entry) == 0) continue;
      std::uint64_t rest = mask & ~(1ull << first) & ~(1ull << idx[p]);
      Rational term = entry * pf(rest);
      if (p % 2 == 1) sum += term;
      else sum -= term;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return pf((subset.size() == 64) ? ~0ull : ((1ull << subset.size()) - 1));
}

Rational pfaffian(const SkewPoint& a) {
  SubsetIndex all(a.size());
  for (int i = 0; i < a.size(); ++i) all[i] = i + 1;
  return sub_pfaffian(a, all);
}

Rational pfaffian_by_matchings(const SkewPoint& a, const SubsetIndex& subset) {
  check_subset(subset, a.size());
  if (subset.size() % 2) return 0;
  Rational total = 0;
  std::vector<std::pair<int, int>> matching;
  std::vector<bool> used(subset.size(), false);
  std::function<void()> rec = [&] {
    std::size_t first = 0;
    while (first < used.size() && used[first]) ++first;
    if (first == used.size()) {
      int crossings = 0;
      for (std::size_t x = 0; x < matching.size(); ++x)
        for (std::size_t y = 0; y < matching.size(); ++y) {
          auto [a1, b1] = matching[x];
          auto [a2, b2] = matching[y];
          if (a1 < a2 && a2 < b1 && b1 < b2) ++crossings;
        }
      Rational prod = crossings % 2 ? -1 : 1;
      for (auto [i, j] : matching) prod *= a.at(subset[i], subset[j]);
      total += prod;
      return;
    }
    used[first] = true;
    for (std::size_t j = first + 1; j < used.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      matching.emplace_back(static_cast<int>(first), static_cast<int>(j));
      rec();
      matching.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec();
  return total;
}

std::vector<Rational> all_sub_pfaffians(const SkewPoint& a) {
  const int n = a.size();
  if (n > 20) throw Error(Errc::IndexOutOfRange, "all_sub_pfaffians supports n <= 20");
  const std::uint32_t full = 1u << n;
  std::vector<Rational> pf(full, Rational(0));
  pf[0] = 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    const int first = __builtin_ctz(mask);
    int pos = 0;
    Rational sum = 0;
    for (int j = first + 1; j < n; ++j) {
      if (!(mask >> j & 1u)) continue;
      ++pos;
      const Rational& entry = a.at(first + 1, j + 1);
      if (sgn(entry) == 0) continue;
      Rational term = entry * pf[mask & ~(1u << first) & ~(1u << j)];
      if (pos % 2 == 1) sum += term;
      else sum -= term;
    }
    pf[mask] = sum;
  }
  return pf;
}

DualPair dual_pair(const IndexVector& index, int n) {
  if (static_cast<int>(index.size()) != n) throw Error(Errc::NotFullFlagIndex, "length must be n");
  for (std::size_t i = 0; i < index.size(); ++i)
    if (index[i] < 1 || index[i] > 2 * n || (i && index[i - 1] >= index[i]))
      throw Error(Errc::NotFullFlagIndex, format_int_list(index));
  DualPair d;
  std::vector<bool> low(n + 1, false);
  for (auto it = index.rbegin(); it != index.rend(); ++it) {
    if (*it > n) d.aset.push_back(2 * n + 1 - *it);
    else low[*it] = true;
  }
  for (int t = 1; t <= n; ++t)
    if (!low[t]) d.bset.push_back(t);
  return d;
}

IndexVector index_from_bset(const SubsetIndex& bset, int n) {
  check_subset(bset, n);
  IndexVector out;
  std::vector<bool> in(n + 1, false);
  for (int b : bset) in[b] = true;
  for (int t = 1; t <= n; ++t)
    if (!in[t]) out.push_back(t);
  for (auto it = bset.rbegin(); it != bset.rend(); ++it) out.push_back(2 * n + 1 - *it);
  return out;
}

Rational q_eval(const IndexVector& index, const SkewPoint& a) {
  const DualPair d = dual_pair(index, a.size());
  if (d.aset != d.bset) throw Error(Errc::AsymmetricDualPair, format_int_list(index));
  return sub_pfaffian(a, d.bset);
}

static SubsetIndex toggle(const SubsetIndex& s, int x) {
  SubsetIndex out = s;
  auto it = std::lower_bound(out.begin(), out.end(), x);
  if (it != out.end() && *it == x) out.erase(it);
  else out.insert(it, x);
  return out;
}

PfaffianRelation exchange_terms(const SubsetIndex& i1, const SubsetIndex& i2) {
  if (i1.size() % 2 == 0 || i2.size() % 2 == 0) throw Error(Errc::EvenCardinality, "subsets must be odd");
  SubsetIndex sd;
  std::set_symmetric_difference(i1.begin(), i1.end(), i2.begin(), i2.end(), std::back_inserter(sd));
  PfaffianRelation rel;
  for (std::size_t t = 0; t < sd.size(); ++t)
    rel.terms.push_back({(t % 2 == 0) ? -1 : 1, toggle(i1, sd[t]), toggle(i2, sd[t])});
  return rel;
}

Rational evaluate(const PfaffianRelation& rel, const SkewPoint& a) {
  Rational sum = 0;
  for (const auto& t : rel.terms) sum += t.sign * sub_pfaffian(a, t.left) * sub_pfaffian(a, t.right);
  return sum;
}

SkewPoint random_skew_point(int n, std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  SkewPoint p(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p.set(i, j, Rational(dist(rng)));
  return p;
}

nlohmann::json to_json(const SkewPoint& p) {
  nlohmann::json upper = nlohmann::json::array();
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (sgn(p.at(i, j)) != 0) upper.push_back({i, j, to_string(p.at(i, j))});
  return {{"n", p.size()}, {"upper", upper}};
}

SkewPoint skew_point_from_json(const nlohmann::json& j) {
  try {
    SkewPoint p(j.at("n").get<int>());
    for (const auto& e : j.at("upper")) {
      const int r = e.at(0).get<int>(), c = e.at(1).get<int>();
      if (r >= c) throw Error(Errc::IndexOutOfRange, "upper entries need i < j");
      const auto& v = e.at(2);
      p.set(r, c, v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace spinquot
