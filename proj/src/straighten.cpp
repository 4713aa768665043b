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

#include "spinquot/straighten.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "spinquot/errors.hpp"

namespace spinquot {

namespace {

SubsetIndex toggled(SubsetIndex s, int x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it != s.end() && *it == x) s.erase(it);
  else s.insert(it, x);
  return s;
}

std::pair<IndexVector, IndexVector> ordered(IndexVector a, IndexVector b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

bool pair_standard(const std::pair<IndexVector, IndexVector>& p) { return bruhat_leq(p.first, p.second); }

constexpr std::size_t kMonomialFuel = 1000000;

bool can_complete(const IndexVector& last, const std::vector<int>& count, const std::vector<int>& content,
                  std::size_t remaining) {
  std::size_t pos = 0;
  long missing = 0, total = 0;
  for (std::size_t v = 1; v < count.size(); ++v) total += content[v] - count[v];
  for (std::size_t v = 1; v < count.size(); ++v) {
    missing += content[v] - count[v];
    while (pos < last.size() && last[pos] <= static_cast<int>(v)) ++pos;
    if (missing > static_cast<long>(remaining * pos)) return false;
    if (total - missing < static_cast<long>(remaining * (last.size() - pos))) return false;
  }
  return true;
}

}  // namespace

bool is_pfaffian_index(const IndexVector& row, int n) {
  return satisfies_shape_conditions(make_omega_n(n, {row})) && std::is_sorted(row.begin(), row.end());
}

bool is_standard_monomial(const Monomial& m) {
  for (std::size_t i = 1; i < m.size(); ++i)
    if (!bruhat_leq(m[i - 1], m[i])) return false;
  return true;
}

Monomial monomial_of(const std::vector<Tableau>& factors) {
  Monomial m;
  for (const auto& f : factors) m.insert(m.end(), f.rows.begin(), f.rows.end());
  std::sort(m.begin(), m.end());
  return m;
}

Straightener::Straightener(int n) : n_(n), fuel_(10 * n * 2) {}

std::vector<std::map<Straightener::Pair, int>> Straightener::relations_of(const Pair& p) const {
  const SubsetIndex b1 = dual_pair(p.first, n_).bset, b2 = dual_pair(p.second, n_).bset;
  SubsetIndex sd;
  std::set_symmetric_difference(b1.begin(), b1.end(), b2.begin(), b2.end(), std::back_inserter(sd));
  std::vector<std::map<Pair, int>> out;
  for (int x : sd) {
    const PfaffianRelation rel = exchange_terms(toggled(b1, x), toggled(b2, x));
    std::map<Pair, int> terms;
    for (const auto& t : rel.terms)
      terms[ordered(index_from_bset(t.left, n_), index_from_bset(t.right, n_))] += t.sign;
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    out.push_back(std::move(terms));
  }
  return out;
}

bool Straightener::try_greedy(const Pair& p, int depth) {
  for (const auto& rel : relations_of(p)) {
    auto self = rel.find(p);
    if (self == rel.end() || std::abs(self->second) != 1) continue;
    bool smaller = true;
    for (const auto& [q, c] : rel)
      if (q != p && !(q < p)) {
        smaller = false;
        break;
      }
    if (!smaller) continue;
    ++stats_.greedy_steps;
    StdExpansion result;
    for (const auto& [q, c] : rel) {
      if (q == p) continue;
      const Rational coeff(-c * self->second);
      for (const auto& [m, v] : pair_rec(q, depth + 1)) result[m] += coeff * v;
    }
    std::erase_if(result, [](const auto& kv) { return sgn(kv.second) == 0; });
    cache_.emplace(p, std::move(result));
    return true;
  }
  return false;
}

void Straightener::solve_class(const Pair& target) {
  ++stats_.class_solves;
  // Every exchange relation preserves the multiset union of the two B-sets,
  // so the closure below is finite.
  std::set<Pair> seen{target};
  std::deque<Pair> todo{target};
  std::vector<std::map<Pair, int>> relations;
  while (!todo.empty()) {
    Pair p = todo.front();
    todo.pop_front();
    for (auto& rel : relations_of(p)) {
      for (const auto& [q, c] : rel)
        if (seen.insert(q).second) todo.push_back(q);
      relations.push_back(std::move(rel));
    }
  }
  std::vector<Pair> nonstd, stdp;
  for (const auto& q : seen) (pair_standard(q) ? stdp : nonstd).push_back(q);
  std::reverse(nonstd.begin(), nonstd.end());
  std::vector<Pair> order = nonstd;
  order.insert(order.end(), stdp.begin(), stdp.end());
  std::map<Pair, std::size_t> column;
  for (std::size_t i = 0; i < order.size(); ++i) column[order[i]] = i;

  Matrix m;
  for (const auto& rel : relations) {
    std::vector<Rational> row(order.size(), Rational(0));
    for (const auto& [q, c] : rel) row[column[q]] = c;
    m.push_back(std::move(row));
  }
  const auto pivots = rref(m);
  for (std::size_t i = 0; i < nonstd.size(); ++i)
    if (i >= pivots.size() || pivots[i] != i)
      throw Error(Errc::FuelExhausted, "exchange relations do not determine " + format_int_list(target.first) + " * " +
                                           format_int_list(target.second));
  for (std::size_t i = 0; i < nonstd.size(); ++i) {
    if (cache_.count(nonstd[i])) continue;
    StdExpansion e;
    for (std::size_t c = nonstd.size(); c < order.size(); ++c)
      if (sgn(m[i][c]) != 0) e[Monomial{order[c].first, order[c].second}] = -m[i][c];
    cache_.emplace(nonstd[i], std::move(e));
  }
}

const StdExpansion& Straightener::pair_rec(const Pair& p, int depth) {
  auto it = cache_.find(p);
  if (it != cache_.end()) return it->second;
  stats_.max_depth = std::max(stats_.max_depth, depth);
  if (pair_standard(p)) return cache_.emplace(p, StdExpansion{{Monomial{p.first, p.second}, Rational(1)}}).first->second;
  if (depth > fuel_)
    throw Error(Errc::FuelExhausted, "rewrite depth exceeded at " + format_int_list(p.first) + " * " +
                                         format_int_list(p.second));
  if (!try_greedy(p, depth)) solve_class(p);
  return cache_.at(p);
}

const StdExpansion& Straightener::straighten_pair(const IndexVector& a, const IndexVector& b) {
  if (!is_pfaffian_index(a, n_) || !is_pfaffian_index(b, n_))
    throw Error(Errc::NotAPfaffianIndex, format_int_list(a) + " * " + format_int_list(b));
  return pair_rec(ordered(a, b), 0);
}

StdExpansion Straightener::straighten(const Monomial& m, const IndexVector* w) {
  return straighten(StdExpansion{{m, Rational(1)}}, w);
}

StdExpansion Straightener::straighten(const StdExpansion& e, const IndexVector* w) {
  // Replacing an incomparable adjacent pair lowers the smallest changed row,
  // so processing the largest monomial first sees each monomial once.
  std::map<Monomial, Rational> todo;
  for (const auto& [m, c] : e) {
    for (const auto& r : m)
      if (!is_pfaffian_index(r, n_)) throw Error(Errc::NotAPfaffianIndex, format_int_list(r));
    Monomial s = m;
    std::sort(s.begin(), s.end());
    todo[s] += c;
  }
  StdExpansion out;
  std::size_t steps = 0;
  while (!todo.empty()) {
    auto node = todo.extract(std::prev(todo.end()));
    const Monomial& m = node.key();
    const Rational c = node.mapped();
    if (sgn(c) == 0) continue;
    if (w && std::any_of(m.begin(), m.end(), [&](const IndexVector& r) { return !bruhat_leq(r, *w); })) continue;
    if (++steps > kMonomialFuel) throw Error(Errc::FuelExhausted, "monomial straightening");
    std::size_t bad = m.size();
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
      if (!bruhat_leq(m[i], m[i + 1])) {
        bad = i;
        break;
      }
    if (bad == m.size()) {
      out[m] += c;
      continue;
    }
    Monomial rest;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != bad && i != bad + 1) rest.push_back(m[i]);
    for (const auto& [pm, v] : straighten_pair(m[bad], m[bad + 1])) {
      Monomial next = rest;
      next.insert(next.end(), pm.begin(), pm.end());
      std::sort(next.begin(), next.end());
      todo[next] += c * v;
    }
  }
  stats_.monomial_steps += steps;
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

StdExpansion straighten_pair(const IndexVector& a, const IndexVector& b, int n) {
  Straightener s(n);
  return s.straighten_pair(a, b);
}

StdExpansion restrict(const StdExpansion& e, const IndexVector& w) {
  StdExpansion out;
  for (const auto& [m, c] : e)
    if (std::all_of(m.begin(), m.end(), [&](const IndexVector& r) { return bruhat_leq(r, w); })) out.emplace(m, c);
  return out;
}

std::vector<int> content_of(const Monomial& m, int n) {
  std::vector<int> c(2 * n + 1, 0);
  for (const auto& r : m)
    for (int x : r) ++c[x];
  return c;
}

std::vector<Monomial> standard_monomials_with_content(int n, const IndexVector& w, const std::vector<int>& content) {
  std::vector<IndexVector> allowed;
  for (const auto& r : minimal_coset_reps_alpha_n(n))
    if (bruhat_leq(r, w)) allowed.push_back(r);
  int total = 0;
  for (int x : content) total += x;
  const std::size_t length = static_cast<std::size_t>(total / n);
  std::vector<Monomial> out;
  std::vector<int> count(2 * n + 1, 0);
  Monomial chain;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (chain.size() == length) {
      out.push_back(chain);
      return;
    }
    if (!chain.empty() && !can_complete(chain.back(), count, content, length - chain.size())) return;
    for (std::size_t i = from; i < allowed.size(); ++i) {
      const auto& r = allowed[i];
      if (!chain.empty() && !bruhat_leq(chain.back(), r)) continue;
      if (std::any_of(r.begin(), r.end(), [&](int x) { return count[x] >= content[x]; })) continue;
      for (int x : r) ++count[x];
      chain.push_back(r);
      rec(i);
      chain.pop_back();
      for (int x : r) --count[x];
    }
  };
  rec(0);
  return out;
}

SchubertSampler::SchubertSampler(int n, IndexVector w, std::uint64_t seed, long param_range)
    : n_(n), w_(std::move(w)), rng_(seed), range_(param_range) {}

SkewPoint SchubertSampler::sample() {
  const int size = 2 * n_;
  auto mirror = [&](int x) { return size + 1 - x; };
  std::uniform_int_distribution<long> dist(-range_, range_ - 1);
  for (int attempt = 0; attempt < 100; ++attempt) {
    // u = product of root elements I + tX over all positive roots.
    std::vector<std::vector<Integer>> u(size, std::vector<Integer>(size, 0));
    for (int i = 0; i < size; ++i) u[i][i] = 1;
    auto add_column = [&](int target, int source, const Integer& t) {
      for (int r = 0; r < size; ++r) u[r][target - 1] += t * u[r][source - 1];
    };
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        for (int kind = 0; kind < 2; ++kind) {
          long t = dist(rng_);
          if (t >= 0) ++t;
          const Integer tt(t);
          if (kind == 0) {
            // E_{ij} - E_{j'i'}
            add_column(j, i, tt);
            add_column(mirror(i), mirror(j), -tt);
          } else {
            // E_{ij'} - E_{ji'}
            add_column(mirror(j), i, tt);
            add_column(mirror(i), j, -tt);
          }
        }
    Matrix top(n_, std::vector<Rational>(2 * n_, Rational(0)));
    for (int r = 0; r < n_; ++r) {
      for (int c = 0; c < n_; ++c) top[r][c] = u[r][w_[c] - 1];
      top[r][n_ + r] = 1;
    }
    auto pivots = rref(top);
    if (static_cast<int>(pivots.size()) < n_ || pivots[n_ - 1] != static_cast<std::size_t>(n_ - 1)) continue;
    // top^{-1} sits in the right half; Z = bottom * top^{-1}.
    Matrix z(n_, std::vector<Rational>(n_, Rational(0)));
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) {
        Rational s = 0;
        for (int k = 0; k < n_; ++k) s += Rational(u[n_ + r][w_[k] - 1]) * top[k][n_ + c];
        z[r][c] = s;
      }
    SkewPoint y(n_);
    for (int a = 1; a <= n_; ++a)
      for (int b = a + 1; b <= n_; ++b) {
        const Rational& yab = z[n_ - a][b - 1];
        if (yab != -z[n_ - b][a - 1]) throw Error(Errc::BasisMismatch, "sampled point is not isotropic");
        y.set(a, b, yab);
      }
    for (int a = 1; a <= n_; ++a)
      if (sgn(z[n_ - a][a - 1]) != 0) throw Error(Errc::BasisMismatch, "sampled point is not isotropic");
    return y;
  }
  throw Error(Errc::SingularEvaluationMatrix, "could not sample a point in the opposite cell");
}

Interpolator::Interpolator(int n, IndexVector w, std::uint64_t seed, int extra_points)
    : n_(n), w_(w), extra_(extra_points), sampler_(n, w, seed) {
  for (const auto& r : minimal_coset_reps_alpha_n(n))
    if (bruhat_leq(r, w_)) rows_.push_back(r);
}

void Interpolator::ensure_points(std::size_t count) {
  while (points_.size() < count) {
    const SkewPoint y = sampler_.sample();
    const auto pf = all_sub_pfaffians(y);
    std::map<IndexVector, Rational> q;
    Integer lcm = 1;
    for (const auto& r : rows_) {
      std::uint32_t mask = 0;
      for (int b : dual_pair(r, n_).bset) mask |= 1u << (b - 1);
      q[r] = pf[mask];
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q[r].get_den_mpz_t());
    }
    // Homogeneity lets each point be rescaled to integers.
    std::map<IndexVector, Integer> scaled;
    for (const auto& [r, v] : q) {
      Rational s = v * lcm;
      scaled[r] = s.get_num();
    }
    points_.push_back(std::move(scaled));
  }
}

Integer Interpolator::value(const Monomial& m, std::size_t point) const {
  Integer v = 1;
  const auto& q = points_[point];
  for (const auto& r : m) {
    auto it = q.find(r);
    if (it == q.end()) return 0;
    v *= it->second;
  }
  return v;
}

Interpolator::Block& Interpolator::block_for(const std::vector<int>& content, std::size_t rows) {
  auto it = blocks_.find(content);
  if (it != blocks_.end()) return it->second;
  Block b;
  b.basis = standard_monomials_with_content(n_, w_, content);
  (void)rows;
  const std::size_t dim = b.basis.size();
  for (int attempt = 0; attempt < 5; ++attempt) {
    const std::size_t need = dim + static_cast<std::size_t>(extra_) * (attempt + 1);
    ensure_points(need);
    b.eval.assign(need, std::vector<Integer>(dim));
    b.eval_mod.assign(need, std::vector<std::uint64_t>(dim));
    for (std::size_t p = 0; p < need; ++p)
      for (std::size_t i = 0; i < dim; ++i) {
        b.eval[p][i] = value(b.basis[i], p);
        b.eval_mod[p][i] = modp::reduce(b.eval[p][i]);
      }
    if (dim == 0) break;
    b.solver = std::make_unique<modp::Solver>(b.eval_mod);
    if (b.solver->full_column_rank()) break;
    b.solver.reset();
  }
  if (dim > 0 && !b.solver) throw Error(Errc::SingularEvaluationMatrix, "evaluation matrix stays singular");
  return blocks_.emplace(content, std::move(b)).first->second;
}

StdExpansion Interpolator::expand(const Monomial& m) {
  for (const auto& r : m)
    if (!is_pfaffian_index(r, n_)) throw Error(Errc::NotAPfaffianIndex, format_int_list(r));
  Monomial sorted = m;
  std::sort(sorted.begin(), sorted.end());
  Block& b = block_for(content_of(sorted, n_), sorted.size());
  const std::size_t dim = b.basis.size(), points = b.eval.size();
  std::vector<Integer> rhs(points);
  std::vector<std::uint64_t> rhs_mod(points);
  for (std::size_t p = 0; p < points; ++p) {
    rhs[p] = value(sorted, p);
    rhs_mod[p] = modp::reduce(rhs[p]);
  }
  StdExpansion out;
  if (dim == 0) {
    for (const auto& v : rhs)
      if (sgn(v) != 0) throw Error(Errc::BasisMismatch, "product is not in the span of the basis");
    return out;
  }
  std::vector<Rational> x(dim);
  bool reconstructed = true;
  const auto xm = b.solver->solve(rhs_mod);
  for (std::size_t i = 0; i < dim && reconstructed; ++i) {
    auto q = modp::reconstruct(xm[i]);
    if (!q) reconstructed = false;
    else x[i] = *q;
  }
  auto consistent = [&](const std::vector<Rational>& sol) {
    for (std::size_t p = 0; p < points; ++p) {
      Rational s = 0;
      for (std::size_t i = 0; i < dim; ++i)
        if (sgn(sol[i]) != 0) s += sol[i] * b.eval[p][i];
      if (s != rhs[p]) return false;
    }
    return true;
  };
  // The matrix has full column rank mod p, hence over Q; an exact residual
  // check on all points therefore certifies the unique solution.
  if (!reconstructed || !consistent(x)) {
    Matrix aug(points, std::vector<Rational>(dim + 1));
    for (std::size_t p = 0; p < points; ++p) {
      for (std::size_t i = 0; i < dim; ++i) aug[p][i] = b.eval[p][i];
      aug[p][dim] = rhs[p];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == dim) throw Error(Errc::BasisMismatch, "inconsistent interpolation system");
    for (std::size_t i = 0; i < dim; ++i) x[i] = aug[i][dim];
  }
  for (std::size_t i = 0; i < dim; ++i)
    if (sgn(x[i]) != 0) out.emplace(b.basis[i], x[i]);
  return out;
}

StdExpansion expand_product(const std::vector<Tableau>& factors, const IndexVector& w, const ExpandOptions& opts) {
  if (factors.empty()) return StdExpansion{{Monomial{}, Rational(1)}};
  const int n = factors.front().n;
  for (const auto& f : factors)
    if (f.shape != Shape::OmegaN || f.n != n) throw Error(Errc::BasisMismatch, "factors must be omega_n tableaux of equal rank");
  const Monomial m = monomial_of(factors);
  StdExpansion symbolic, interpolated;
  if (opts.method != ExpandMethod::Interpolation) {
    Straightener s(n);
    symbolic = s.straighten(m, &w);
  }
  if (opts.method != ExpandMethod::Symbolic) {
    Interpolator interp(n, w, opts.seed);
    interpolated = interp.expand(m);
  }
  if (opts.method == ExpandMethod::Both && symbolic != interpolated)
    throw Error(Errc::BasisMismatch, "symbolic and interpolated expansions differ");
  const StdExpansion& result = opts.method == ExpandMethod::Interpolation ? interpolated : symbolic;
  bool invariant = true;
  for (const auto& f : factors) invariant = invariant && is_t_invariant(f);
  if (invariant) {
    const int k = static_cast<int>(m.size()) / 2;
    const auto basis = enumerate_basis_omega_n(n, w, k);
    std::set<Monomial> keys;
    for (const auto& t : basis) keys.insert(t.rows);
    for (const auto& [mono, c] : result)
      if (!keys.count(mono)) throw Error(Errc::BasisMismatch, "term outside the standard basis");
  }
  return result;
}

nlohmann::json to_json(const StdExpansion& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : e) arr.push_back({{"coeff", to_string(c)}, {"rows", m}});
  return arr;
}

StdExpansion expansion_from_json(const nlohmann::json& j) {
  try {
    StdExpansion e;
    for (const auto& term : j) {
      Monomial m = term.at("rows").get<Monomial>();
      std::sort(m.begin(), m.end());
      e[m] += parse_rational(term.at("coeff").get<std::string>());
    }
    std::erase_if(e, [](const auto& kv) { return sgn(kv.second) == 0; });
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, ex.what());
  }
}

}  // namespace spinquot
