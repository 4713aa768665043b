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

#include "spinquot/ring.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "spinquot/errors.hpp"
#include "spinquot/linalg.hpp"

namespace spinquot {

namespace {

using Element = std::map<Tableau, Rational>;

class Context {
 public:
  explicit Context(const RingSpec& spec) : spec_(spec), straightener_(spec.kind == RingKind::OmegaN ? spec.n : 1) {
    validate(spec);
  }

  const std::vector<Tableau>& basis(int k) {
    auto it = bases_.find(k);
    if (it != bases_.end()) return it->second;
    std::vector<Tableau> b;
    if (k == 0) b.push_back(unit());
    else if (spec_.kind == RingKind::OmegaN) b = enumerate_basis_omega_n(spec_.n, spec_.w, k * spec_.step);
    else b = enumerate_basis_omega_1(spec_.type, spec_.n, k);
    std::map<Tableau, std::size_t> idx;
    for (std::size_t i = 0; i < b.size(); ++i) idx.emplace(b[i], i);
    index_.emplace(k, std::move(idx));
    return bases_.emplace(k, std::move(b)).first->second;
  }

  std::size_t index_of(int k, const Tableau& t) {
    basis(k);
    const auto& idx = index_.at(k);
    auto it = idx.find(t);
    if (it == idx.end()) throw Error(Errc::BasisMismatch, "term outside the standard basis:\n" + to_text(t));
    return it->second;
  }

  Tableau unit() const {
    return spec_.kind == RingKind::OmegaN ? make_omega_n(spec_.n, {}) : make_omega_one(spec_.type, spec_.n, {});
  }

  int ring_degree(const Tableau& t) const {
    const int deg = t.degree();
    if (deg % spec_.step != 0) throw Error(Errc::BasisMismatch, "generator degree is not a multiple of the step");
    return deg / spec_.step;
  }

  // Standard-basis expansion of the product of tableaux.
  Element product(const std::vector<const Tableau*>& factors) {
    Tableau merged = unit();
    for (const Tableau* f : factors) merged = multiply(merged, *f);
    if (spec_.kind == RingKind::OmegaOne) return Element{{merged, Rational(1)}};
    Element out;
    for (auto& [m, c] : straightener_.straighten(merged.rows, &spec_.w)) out[make_omega_n(spec_.n, m)] += c;
    return out;
  }

  Element times(const Element& e, const Tableau& g) {
    Element out;
    for (const auto& [t, c] : e)
      for (const auto& [u, v] : product({&t, &g})) out[u] += c * v;
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
  }

  const RingSpec& spec() const { return spec_; }

 private:
  RingSpec spec_;
  Straightener straightener_;
  std::map<int, std::vector<Tableau>> bases_;
  std::map<int, std::map<Tableau, std::size_t>> index_;
};

std::size_t modular_rank(const std::vector<std::map<std::size_t, Rational>>& rows, std::size_t dim, bool& ok) {
  modp::ModMatrix m;
  ok = true;
  for (const auto& r : rows) {
    std::vector<std::uint64_t> row(dim, 0);
    for (const auto& [i, c] : r) {
      auto v = modp::reduce(c);
      if (!v) {
        ok = false;
        return 0;
      }
      row[i] = *v;
    }
    m.push_back(std::move(row));
  }
  return modp::rank(std::move(m));
}

Matrix dense(const std::vector<std::map<std::size_t, Rational>>& rows, std::size_t dim) {
  Matrix m(rows.size(), std::vector<Rational>(dim, Rational(0)));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [i, c] : rows[r]) m[r][i] = c;
  return m;
}

std::map<std::size_t, Rational> coordinates(Context& ctx, int k, const Element& e) {
  std::map<std::size_t, Rational> out;
  for (const auto& [t, c] : e) out[ctx.index_of(k, t)] += c;
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

std::vector<std::vector<std::size_t>> products_of_degree(const std::vector<int>& degrees, int k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < degrees.size(); ++i) {
      if (degrees[i] > left) continue;
      cur.push_back(i);
      rec(i, left - degrees[i]);
      cur.pop_back();
    }
  };
  rec(0, k);
  return out;
}

}  // namespace

RingSpec omega_n_spec(int n, IndexVector w, int max_degree, int step) {
  RingSpec s;
  s.kind = RingKind::OmegaN;
  s.n = n;
  s.w = std::move(w);
  s.max_degree = max_degree;
  s.step = step;
  return s;
}

RingSpec omega_one_spec(GroupType type, int n, int max_degree) {
  RingSpec s;
  s.kind = RingKind::OmegaOne;
  s.type = type;
  s.n = n;
  s.max_degree = max_degree;
  return s;
}

void validate(const RingSpec& spec) {
  if (spec.max_degree < 1 || spec.step < 1) throw Error(Errc::RankMismatch, "max degree and step must be positive");
  if (spec.kind == RingKind::OmegaN) {
    const auto reps = minimal_coset_reps_alpha_n(spec.n);
    if (std::find(reps.begin(), reps.end(), spec.w) == reps.end())
      throw Error(Errc::InvalidSchubertIndex, format_int_list(spec.w));
  } else {
    if (spec.step != 1) throw Error(Errc::RankMismatch, "omega_1 rings use step 1");
    if ((spec.type == GroupType::D && spec.n < 4) || (spec.type == GroupType::C && spec.n < 2))
      throw Error(Errc::UnsupportedRank, std::to_string(spec.n));
  }
}

std::vector<Tableau> ring_basis(const RingSpec& spec, int k) {
  Context ctx(spec);
  return ctx.basis(k);
}

std::vector<std::size_t> hilbert(const RingSpec& spec) {
  Context ctx(spec);
  std::vector<std::size_t> h;
  for (int k = 0; k <= spec.max_degree; ++k) h.push_back(ctx.basis(k).size());
  return h;
}

bool GenerationReport::surjective() const {
  return std::all_of(per_degree.begin(), per_degree.end(), [](const DegreeReport& r) { return r.surjective; });
}

GenerationReport check_generation(const RingSpec& spec, int d, const std::optional<std::vector<Tableau>>& generators) {
  if (d < 1 || d > spec.max_degree) throw Error(Errc::RankMismatch, "generation degree must lie in 1..max degree");
  Context ctx(spec);
  GenerationReport report;
  report.d = d;
  if (generators) {
    report.generators = *generators;
  } else {
    for (int j = 1; j <= d; ++j) {
      const auto& b = ctx.basis(j);
      report.generators.insert(report.generators.end(), b.begin(), b.end());
    }
  }
  std::map<int, std::vector<const Tableau*>> by_degree;
  for (const auto& g : report.generators) {
    const int j = ctx.ring_degree(g);
    if (j < 1) throw Error(Errc::BasisMismatch, "generators must have positive degree");
    by_degree[j].push_back(&g);
  }
  std::map<int, std::vector<Element>> span;
  span[0] = {Element{{ctx.unit(), Rational(1)}}};
  for (int k = 1; k <= spec.max_degree; ++k) {
    const std::size_t dim = ctx.basis(k).size();
    std::vector<std::map<std::size_t, Rational>> rows;
    for (const auto& [j, gens] : by_degree) {
      if (j > k) break;
      for (const Tableau* g : gens)
        for (const auto& e : span[k - j]) {
          auto c = coordinates(ctx, k, ctx.times(e, *g));
          if (!c.empty()) rows.push_back(std::move(c));
        }
    }
    DegreeReport dr;
    dr.k = k;
    dr.dim = dim;
    bool ok = false;
    const std::size_t mod_rank = modular_rank(rows, dim, ok);
    std::vector<Element> next;
    if (ok && mod_rank == dim) {
      // A full rank mod p is a full rank over Q.
      dr.span = dim;
      for (const auto& t : ctx.basis(k)) next.push_back(Element{{t, Rational(1)}});
    } else {
      Matrix m = dense(rows, dim);
      const auto pivots = rref(m);
      dr.span = pivots.size();
      dr.exact = true;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        Element e;
        for (std::size_t i = 0; i < dim; ++i)
          if (sgn(m[r][i]) != 0) e[ctx.basis(k)[i]] = m[r][i];
        next.push_back(std::move(e));
      }
    }
    dr.surjective = dr.span == dim;
    span[k] = std::move(next);
    report.per_degree.push_back(dr);
  }
  return report;
}

std::vector<Tableau> relation_generators(const RingSpec& spec, int k) {
  Context ctx(spec);
  std::vector<Tableau> gens = ctx.basis(1);
  for (int j = 2; j <= k; ++j)
    for (const auto& t : ctx.basis(j))
      if (!find_factor(t, (j - 1) * spec.step, spec.step)) gens.push_back(t);
  return gens;
}

std::vector<StdExpansion> RelationSpace::expansions() const {
  std::vector<StdExpansion> out;
  for (const auto& rel : kernel) {
    StdExpansion e;
    for (const auto& [p, c] : rel) {
      Monomial m;
      for (std::size_t g : products[p]) m.insert(m.end(), generators[g].rows.begin(), generators[g].rows.end());
      std::sort(m.begin(), m.end());
      e[m] += c;
    }
    out.push_back(std::move(e));
  }
  return out;
}

RelationSpace relations_in_degree(const RingSpec& spec, int k, const std::optional<std::vector<Tableau>>& generators) {
  if (k < 1) throw Error(Errc::RankMismatch, "relation degree must be positive");
  Context ctx(spec);
  RelationSpace space;
  space.k = k;
  space.generators = generators ? *generators : relation_generators(spec, k);
  std::vector<int> degrees;
  for (const auto& g : space.generators) degrees.push_back(ctx.ring_degree(g));
  const std::size_t dim = ctx.basis(k).size();
  std::set<Tableau> seen;
  std::vector<std::map<std::size_t, Rational>> rows;
  for (auto& p : products_of_degree(degrees, k)) {
    std::vector<const Tableau*> factors;
    Tableau merged = ctx.unit();
    for (std::size_t g : p) {
      factors.push_back(&space.generators[g]);
      merged = multiply(merged, space.generators[g]);
    }
    // Products with the same merged rows are the same Pfaffian monomial.
    if (!seen.insert(merged).second) continue;
    rows.push_back(coordinates(ctx, k, ctx.product(factors)));
    space.products.push_back(std::move(p));
  }
  // Left kernel: x with sum_p x_p row_p = 0.
  Matrix transposed(dim, std::vector<Rational>(rows.size(), Rational(0)));
  for (std::size_t p = 0; p < rows.size(); ++p)
    for (const auto& [i, c] : rows[p]) transposed[i][p] = c;
  Matrix kernel = nullspace(std::move(transposed), rows.size());
  rref(kernel);
  for (const auto& v : kernel) {
    std::map<std::size_t, Rational> rel;
    for (std::size_t p = 0; p < v.size(); ++p)
      if (sgn(v[p]) != 0) rel[p] = v[p];
    if (!rel.empty()) space.kernel.push_back(std::move(rel));
  }
  return space;
}

std::vector<std::size_t> veronese_hilbert(int m, int e, int max_degree) {
  std::vector<std::size_t> h;
  for (int k = 0; k <= max_degree; ++k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(e * k + m), static_cast<unsigned long>(m));
    h.push_back(b.get_ui());
  }
  return h;
}

std::optional<std::pair<int, int>> identify_projective_space(const std::vector<std::size_t>& h) {
  if (h.size() < 4) throw Error(Errc::AmbiguousMatch, "at least degrees 0..3 are needed to identify a Veronese image");
  if (h[0] != 1) return std::nullopt;
  if (std::all_of(h.begin(), h.end(), [](std::size_t v) { return v == 1; })) return std::make_pair(0, 1);
  const int bound = static_cast<int>(h[1]);
  std::optional<std::pair<int, int>> found;
  for (int m = 1; m <= bound; ++m)
    for (int e = 1; e <= bound; ++e)
      if (veronese_hilbert(m, e, static_cast<int>(h.size()) - 1) == h) {
        if (found) throw Error(Errc::AmbiguousMatch, "several Veronese images match");
        found = std::make_pair(m, e);
      }
  return found;
}

SemistableReport has_semistable(const RingSpec& spec) {
  validate(spec);
  SemistableReport r;
  Context ctx(spec);
  for (int k = 1; k <= spec.max_degree && !r.degree; ++k)
    if (!ctx.basis(k).empty()) r.degree = k;
  if (spec.kind == RingKind::OmegaN) {
    const WeylElement w = element_from_index(spec.w, GroupType::D, spec.n);
    r.verdict = dominance(apply_to_weight(w, two_omega_n(spec.n)), GroupType::D);
  } else {
    // Longest minimal representative for the omega_1 parabolic.
    const int n = spec.n;
    std::vector<int> word;
    for (int i = 1; i <= n - 2; ++i) word.push_back(i);
    if (spec.type == GroupType::D) {
      word.push_back(n - 1);
      word.push_back(n);
    } else {
      word.push_back(n - 1);
      word.push_back(n);
      word.push_back(n - 1);
    }
    for (int i = n - 2; i >= 1; --i) word.push_back(i);
    const WeylElement w = word_to_one_line(word, spec.type, n);
    r.verdict = dominance(apply_to_weight(w, two_omega_1(n)), spec.type);
  }
  return r;
}

nlohmann::json to_json(const RingSpec& spec) {
  nlohmann::json j;
  j["kind"] = spec.kind == RingKind::OmegaN ? "omega_n" : "omega_1";
  j["n"] = spec.n;
  if (spec.kind == RingKind::OmegaN) j["w"] = spec.w;
  else j["type"] = spec.type == GroupType::D ? "D" : "C";
  j["max_degree"] = spec.max_degree;
  j["step"] = spec.step;
  return j;
}

nlohmann::json to_json(const GenerationReport& r) {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& d : r.per_degree)
    per.push_back({{"k", d.k}, {"dim", d.dim}, {"span", d.span}, {"surjective", d.surjective}, {"exact", d.exact}});
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : r.generators) gens.push_back(to_json(g));
  return {{"d", r.d}, {"per_degree", per}, {"surjective", r.surjective()}, {"generators", gens}};
}

nlohmann::json to_json(const RelationSpace& r) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : r.generators) gens.push_back(to_json(g));
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& rel : r.kernel) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [p, c] : rel) terms.push_back({{"coeff", to_string(c)}, {"factors", r.products[p]}});
    rels.push_back(terms);
  }
  return {{"k", r.k}, {"generators", gens}, {"relations", rels}};
}

}  // namespace spinquot
