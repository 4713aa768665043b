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

#include "spinquot/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <unistd.h>

#include "CLI11.hpp"
#include "spinquot/catalog.hpp"
#include "spinquot/errors.hpp"
#include "spinquot/linalg.hpp"
#include "spinquot/pfaffian.hpp"
#include "spinquot/rewrite.hpp"
#include "spinquot/ring.hpp"
#include "spinquot/straighten.hpp"
#include "spinquot/tableau.hpp"
#include "spinquot/weyl.hpp"

namespace spinquot::cli {

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kOutDirEnv = "SPINQUOT_OUT_DIR";
constexpr const char* kDescentCitation =
    "S. Kumar, Descent of line bundles to GIT quotients of flag varieties by maximal torus, "
    "Transformation Groups 13 (2008), Theorem 3.10";
constexpr const char* kGeneralRankNote =
    "Statements for Spin(8n) with n >= 3 are not reproduced; only the n = 2 instance (Spin(16)) is computed. "
    "The general case is covered by property tests only.";

class Claims {
 public:
  void add(std::string name, bool ok, nlohmann::json detail = nullptr) {
    list_.push_back({std::move(name), ok, std::move(detail)});
  }
  // Runs `body`; a thrown Error turns into a failed claim.
  template <class F>
  void check(const std::string& name, F&& body) {
    try {
      nlohmann::json detail;
      const bool ok = body(detail);
      add(name, ok, detail);
    } catch (const Error& e) {
      add(name, false, {{"error", e.what()}});
    }
  }
  std::vector<Claim>& list() { return list_; }

 private:
  std::vector<Claim> list_;
};

nlohmann::json claims_json(const std::vector<Claim>& claims) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : claims) {
    nlohmann::json j = {{"claim", c.name}, {"ok", c.ok}};
    if (!c.detail.is_null()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

nlohmann::json pair_json(const std::optional<std::pair<int, int>>& p) {
  if (!p) return nullptr;
  return {{"m", p->first}, {"e", p->second}};
}

std::optional<std::pair<int, int>> try_identify(const std::vector<std::size_t>& h) {
  if (h.size() < 4) return std::nullopt;
  return identify_projective_space(h);
}

std::set<Tableau> as_set(const std::vector<Tableau>& v) { return {v.begin(), v.end()}; }

std::vector<std::string> names_of(const std::vector<Tableau>& v, const std::vector<catalog::Named>& cat) {
  std::vector<std::string> out;
  for (const auto& t : v) {
    auto it = std::find_if(cat.begin(), cat.end(), [&](const catalog::Named& x) { return x.tableau == t; });
    out.push_back(it == cat.end() ? to_text(t) : it->name);
  }
  return out;
}

// Linear combination of tableau products, as an expansion keyed by merged rows.
StdExpansion combination(const std::vector<std::pair<int, std::vector<std::string>>>& terms,
                         const std::vector<catalog::Named>& cat) {
  StdExpansion e;
  for (const auto& [c, names] : terms) {
    std::vector<Tableau> f;
    for (const auto& n : names) f.push_back(catalog::find(cat, n));
    e[monomial_of(f)] += Rational(c);
  }
  std::erase_if(e, [](const auto& kv) { return sgn(kv.second) == 0; });
  return e;
}

bool in_span(const std::vector<StdExpansion>& basis, const StdExpansion& v) {
  std::map<Monomial, std::size_t> col;
  for (const auto& b : basis)
    for (const auto& [m, c] : b) col.emplace(m, 0);
  for (const auto& [m, c] : v) col.emplace(m, 0);
  std::size_t i = 0;
  for (auto& [m, idx] : col) idx = i++;
  auto to_row = [&](const StdExpansion& e) {
    std::vector<Rational> r(col.size(), Rational(0));
    for (const auto& [m, c] : e) r[col[m]] = c;
    return r;
  };
  Matrix a;
  for (const auto& b : basis) a.push_back(to_row(b));
  const std::size_t before = rank(a);
  a.push_back(to_row(v));
  return rank(a) == before;
}

nlohmann::json descent(const std::string& group, const std::string& bundle) {
  return {{"group", group}, {"descending_bundles", bundle}, {"citation", kDescentCitation}, {"computed", false}};
}

PresetResult finish(nlohmann::json report, std::vector<Claim> claims) {
  PresetResult r;
  r.claims = std::move(claims);
  report["claims"] = claims_json(r.claims);
  report["verified"] = r.verified();
  r.report = std::move(report);
  return r;
}

PresetResult preset_spin8(std::uint64_t seed) {
  const auto gam = catalog::spin8_gammas();
  const IndexVector full{5, 6, 7, 8};
  Claims c;
  nlohmann::json report = {{"preset", "spin8"}, {"group", "Spin(8)"}, {"seed", seed},
                           {"descent", descent("Spin(8)", "L(2m omega_4), m >= 1")}};
  const RingSpec spec = omega_n_spec(4, full, 4);

  c.check("R_1 basis of G/P is {Gamma1, Gamma2, Gamma3}", [&](nlohmann::json& d) {
    const auto b = ring_basis(spec, 1);
    d = names_of(b, gam);
    return as_set(b) == std::set<Tableau>{catalog::find(gam, "Gamma1"), catalog::find(gam, "Gamma2"),
                                          catalog::find(gam, "Gamma3")};
  });
  c.check("Gamma4 = Gamma1 - Gamma2 + Gamma3", [&](nlohmann::json& d) {
    const auto e = straighten_pair({1, 4, 6, 7}, {2, 3, 5, 8}, 4);
    d = to_json(e);
    return e == combination({{1, {"Gamma1"}}, {-1, {"Gamma2"}}, {1, {"Gamma3"}}}, gam);
  });
  const auto h = hilbert(spec);
  c.check("Hilbert function (1, 3, 6, 10) for k <= 3", [&](nlohmann::json& d) {
    d = h;
    return std::vector<std::size_t>(h.begin(), h.begin() + 4) == std::vector<std::size_t>{1, 3, 6, 10};
  });
  c.check("R is generated by R_1", [&](nlohmann::json& d) {
    const auto g = check_generation(spec, 1);
    d = to_json(g)["per_degree"];
    return g.surjective();
  });
  c.check("quotient is (P^2, O(1))", [&](nlohmann::json& d) {
    const auto id = try_identify(h);
    d = pair_json(id);
    return id == std::make_pair(2, 1);
  });
  c.check("no quadratic relations among Gamma1, Gamma2, Gamma3", [&](nlohmann::json& d) {
    const auto r = relations_in_degree(spec, 2);
    d = r.kernel.size();
    return r.kernel.empty();
  });
  c.check("semistable points exist in degree 1; w(2 omega_4) <= 0", [&](nlohmann::json& d) {
    const auto s = has_semistable(spec);
    d = {{"degree", s.degree ? nlohmann::json(*s.degree) : nlohmann::json(nullptr)},
         {"nonpositive", s.verdict.nonpositive}};
    return s.degree == 1 && s.verdict.nonpositive;
  });
  c.check("X(2,4,6,8): R_1 = {Gamma3}, quotient is a point", [&](nlohmann::json& d) {
    const RingSpec s = omega_n_spec(4, {2, 4, 6, 8}, 4);
    const auto hh = hilbert(s);
    const auto b = ring_basis(s, 1);
    d = {{"hilbert", hh}, {"basis", names_of(b, gam)}};
    return b == std::vector<Tableau>{catalog::find(gam, "Gamma3")} &&
           std::all_of(hh.begin(), hh.end(), [](std::size_t v) { return v == 1; });
  });
  c.check("X(3,4,7,8): Hilbert (1, 2, 3, 4), no quadratic relations, (P^1, O(1))", [&](nlohmann::json& d) {
    const RingSpec s = omega_n_spec(4, {3, 4, 7, 8}, 3);
    const auto hh = hilbert(s);
    const auto rel = relations_in_degree(s, 2);
    const auto id = try_identify(hh);
    d = {{"hilbert", hh}, {"relations", rel.kernel.size()}, {"identified", pair_json(id)}};
    return hh == std::vector<std::size_t>{1, 2, 3, 4} && rel.kernel.empty() && id == std::make_pair(1, 1);
  });
  c.check("X(1,2,3,4) has no semistable points", [&](nlohmann::json& d) {
    const auto s = has_semistable(omega_n_spec(4, {1, 2, 3, 4}, 4));
    d = {{"nonpositive", s.verdict.nonpositive}, {"diagnostic", s.verdict.diagnostic}};
    return !s.degree;
  });
  report["hilbert"] = h;
  return finish(std::move(report), std::move(c.list()));
}

PresetResult preset_spin8n(int n, std::uint64_t seed) {
  const auto tabs = catalog::spin8n_tableaux(n);
  const auto ws = catalog::spin8n_schubert(n);
  const int rank_n = 4 * n;
  const IndexVector& w6 = ws[5];
  const RingSpec s6 = omega_n_spec(rank_n, w6, 4);
  Claims c;
  nlohmann::json report = {{"preset", "spin8n"},
                           {"group", "Spin(" + std::to_string(8 * n) + ")"},
                           {"n", n},
                           {"seed", seed},
                           {"limitation", kGeneralRankNote},
                           {"descent", descent("Spin(8n), n >= 2", "L(4m omega_{4n}), m >= 1")}};
  nlohmann::json cat = nlohmann::json::object();
  for (const auto& t : tabs) cat[t.name] = t.tableau.rows;
  report["tableaux"] = cat;
  auto tab = [&](const std::string& name) { return catalog::find(tabs, name); };
  auto set_of = [&](std::initializer_list<const char*> names) {
    std::set<Tableau> s;
    for (const char* nm : names) s.insert(tab(nm));
    return s;
  };

  c.check("R_1 of X(w_6) has basis X_1..X_6", [&](nlohmann::json& d) {
    const auto b = ring_basis(s6, 1);
    d = names_of(b, tabs);
    return as_set(b) == set_of({"X1", "X2", "X3", "X4", "X5", "X6"});
  });
  const auto gens = relation_generators(s6, 3);
  c.check("indecomposable standard monomials of degree 2 are Y_1..Y_4", [&](nlohmann::json& d) {
    std::vector<Tableau> deg2;
    for (const auto& g : gens)
      if (g.degree() == 2) deg2.push_back(g);
    d = names_of(deg2, tabs);
    return as_set(deg2) == set_of({"Y1", "Y2", "Y3", "Y4"});
  });
  c.check("indecomposable standard monomials of degree 3 are Z_1, Z_2", [&](nlohmann::json& d) {
    std::vector<Tableau> deg3;
    for (const auto& g : gens)
      if (g.degree() == 3) deg3.push_back(g);
    d = names_of(deg3, tabs);
    return as_set(deg3) == set_of({"Z1", "Z2"});
  });

  const ExpandOptions both{ExpandMethod::Both, seed};
  auto expansion_claim = [&](const std::string& label, const std::vector<std::string>& lhs,
                             const std::vector<std::pair<int, std::vector<std::string>>>& rhs) {
    c.check(label, [&](nlohmann::json& d) {
      std::vector<Tableau> f;
      for (const auto& nm : lhs) f.push_back(tab(nm));
      const auto e = expand_product(f, w6, both);
      d = to_json(e);
      return e == combination(rhs, tabs);
    });
  };
  expansion_claim("X_4 X_5 = Y_1 - Y_2 + X_3 X_6", {"X4", "X5"}, {{1, {"Y1"}}, {-1, {"Y2"}}, {1, {"X3", "X6"}}});
  expansion_claim("X_2 X_5 = Y_1 - Y_3 + X_1 X_6", {"X2", "X5"}, {{1, {"Y1"}}, {-1, {"Y3"}}, {1, {"X1", "X6"}}});
  expansion_claim("X_2 X_3 = Y_1 - Y_4 + X_1 X_4", {"X2", "X3"}, {{1, {"Y1"}}, {-1, {"Y4"}}, {1, {"X1", "X4"}}});
  expansion_claim("X_2 Y_1 = Z_1", {"X2", "Y1"}, {{1, {"Z1"}}});
  expansion_claim("X_2 Y_2 = Z_2", {"X2", "Y2"}, {{1, {"Z2"}}});

  c.check("degree-2 relation space is spanned by the three quadratic relations", [&](nlohmann::json& d) {
    const auto r = relations_in_degree(s6, 2);
    const auto basis = r.expansions();
    d = to_json(r)["relations"];
    const std::vector<StdExpansion> expected = {
        combination({{1, {"X4", "X5"}}, {-1, {"X3", "X6"}}, {1, {"Y2"}}, {-1, {"Y1"}}}, tabs),
        combination({{1, {"X2", "X5"}}, {-1, {"X1", "X6"}}, {1, {"Y3"}}, {-1, {"Y1"}}}, tabs),
        combination({{1, {"X2", "X3"}}, {-1, {"X1", "X4"}}, {1, {"Y4"}}, {-1, {"Y1"}}}, tabs)};
    return basis.size() == 3 && std::all_of(expected.begin(), expected.end(), [&](const StdExpansion& p) {
             return in_span(basis, p);
           });
  });
  c.check("degree-3 relation space contains X_2 Y_1 - Z_1 and X_2 Y_2 - Z_2", [&](nlohmann::json& d) {
    const auto basis = relations_in_degree(s6, 3).expansions();
    d = basis.size();
    return in_span(basis, combination({{1, {"X2", "Y1"}}, {-1, {"Z1"}}}, tabs)) &&
           in_span(basis, combination({{1, {"X2", "Y2"}}, {-1, {"Z2"}}}, tabs));
  });
  c.check("R is not generated by R_1 (fails at k = 2)", [&](nlohmann::json& d) {
    const auto g = check_generation(s6, 1);
    d = to_json(g)["per_degree"];
    return g.per_degree[0].surjective && !g.per_degree[1].surjective;
  });
  c.check("R is generated in degree <= 2 (k <= 4)", [&](nlohmann::json& d) {
    const auto g = check_generation(s6, 2);
    d = to_json(g)["per_degree"];
    return g.surjective();
  });
  c.check("R is generated by X_1..X_6 and Y_1 (k <= 4)", [&](nlohmann::json& d) {
    std::vector<Tableau> g;
    for (const char* nm : {"X1", "X2", "X3", "X4", "X5", "X6", "Y1"}) g.push_back(tab(nm));
    const auto r = check_generation(s6, 2, g);
    d = to_json(r)["per_degree"];
    return r.surjective();
  });

  const std::vector<std::pair<int, int>> expected = {{0, 1}, {1, 2}, {1, 2}, {3, 2}, {2, 2}};
  const std::vector<std::string> label = {"point", "(P^1, O(2))", "(P^1, O(2))", "(P^3, O(2))", "(P^2, O(2))"};
  nlohmann::json quotients = nlohmann::json::array();
  std::vector<std::vector<std::size_t>> hs(5);
  for (int i = 0; i < 5; ++i) {
    c.check("X(w_" + std::to_string(i + 1) + ") quotient for L(4 omega) is " + label[i], [&](nlohmann::json& d) {
      hs[i] = hilbert(omega_n_spec(rank_n, ws[i], 3, 2));
      const auto id = try_identify(hs[i]);
      d = {{"w", ws[i]}, {"hilbert", hs[i]}, {"identified", pair_json(id)}};
      quotients.push_back(d);
      return id == expected[i];
    });
  }
  report["quotients"] = quotients;
  c.check("Y_1 vanishes on X(w_i) for i <= 5", [&](nlohmann::json&) {
    const auto& y1 = tab("Y1").rows;
    for (int i = 0; i < 5; ++i)
      if (std::all_of(y1.begin(), y1.end(), [&](const IndexVector& r) { return bruhat_leq(r, ws[i]); })) return false;
    return true;
  });
  c.check("every X(w_i) admits semistable points in degree <= 2 and w_i(2 omega) <= 0", [&](nlohmann::json& d) {
    d = nlohmann::json::array();
    bool ok = true;
    for (const auto& w : ws) {
      const auto s = has_semistable(omega_n_spec(rank_n, w, 2));
      d.push_back({{"w", w}, {"degree", s.degree ? nlohmann::json(*s.degree) : nlohmann::json(nullptr)},
                   {"nonpositive", s.verdict.nonpositive}});
      ok = ok && s.degree && *s.degree <= 2 && s.verdict.nonpositive;
    }
    return ok;
  });

  // Reduction systems presenting the quotients of X(w_2), X(w_4), X(w_5).
  struct SystemCase {
    std::string name;
    int w_index;
  };
  nlohmann::json systems = nlohmann::json::array();
  for (const SystemCase& sc : {SystemCase{"veronese-1-2", 1}, SystemCase{"veronese-3-2", 3},
                               SystemCase{"veronese-2-2", 4}}) {
    const ReductionSystem sys = preset(sc.name);
    const IndexVector& w = ws[sc.w_index];
    c.check("system " + sc.name + " is confluent", [&](nlohmann::json& d) {
      const auto r = check_confluence(sys);
      d = {{"ambiguities", r.ambiguities.size()}, {"extra_checks", r.extra_checks.size()}};
      systems.push_back({{"system", sc.name}, {"w", w}, {"confluent", r.confluent}});
      return r.confluent;
    });
    c.check("system " + sc.name + " normal forms count R_k of X(w_" + std::to_string(sc.w_index + 1) + ")",
            [&](nlohmann::json& d) {
              std::vector<std::size_t> counts;
              for (int k = 0; k < static_cast<int>(hs[sc.w_index].size()); ++k) counts.push_back(normal_form_count(sys, k));
              d = {{"normal_forms", counts}, {"hilbert", hs[sc.w_index]}};
              return counts == hs[sc.w_index];
            });
    c.check("system " + sc.name + " variables map onto a basis of R_1", [&](nlohmann::json& d) {
      Straightener st(rank_n);
      const auto basis = enumerate_basis_omega_n(rank_n, w, 2);
      std::map<Monomial, std::size_t> col;
      for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i].rows] = i;
      Matrix m;
      for (const auto& [v, expr] : sys.bindings) {
        std::vector<Tableau> f;
        std::stringstream ss(expr);
        std::string part;
        while (std::getline(ss, part, '*')) f.push_back(tab(part));
        std::vector<Rational> row(basis.size(), Rational(0));
        for (const auto& [mono, coeff] : st.straighten(monomial_of(f), &w)) row[col.at(mono)] = coeff;
        m.push_back(std::move(row));
      }
      const std::size_t r = rank(m);
      d = {{"rank", r}, {"dim", basis.size()}};
      return r == basis.size() && r == sys.bindings.size();
    });
  }
  report["systems"] = systems;
  return finish(std::move(report), std::move(c.list()));
}

PresetResult preset_omega_one(GroupType type, std::uint64_t seed) {
  const bool d_type = type == GroupType::D;
  Claims c;
  nlohmann::json report = {
      {"preset", d_type ? "p-alpha1" : "sp"},
      {"seed", seed},
      {"descent", descent(d_type ? "Spin(2n), n >= 4" : "Sp(2n), n >= 2", "L(2m omega_1), m >= 1")}};
  nlohmann::json cases = nlohmann::json::array();
  const int lo = d_type ? 4 : 2;
  for (int n = lo; n <= 8; ++n) {
    const std::string group = (d_type ? "Spin(" : "Sp(") + std::to_string(2 * n) + ")";
    const RingSpec spec = omega_one_spec(type, n, 3);
    const int m = d_type ? n - 2 : n - 1;
    c.check(group + "/P: R_1 basis is the columns X_j", [&](nlohmann::json& d) {
      std::set<Tableau> expect;
      for (int j = 1; j <= n; ++j)
        if (!(d_type && j == n)) expect.insert(catalog::omega_one_generator(type, n, j));
      const auto b = ring_basis(spec, 1);
      d = b.size();
      return as_set(b) == expect;
    });
    c.check(group + "/P: generated by R_1 with Hilbert of (P^" + std::to_string(m) + ", O(1))",
            [&](nlohmann::json& d) {
              const auto h = hilbert(spec);
              const auto g = check_generation(spec, 1);
              d = {{"hilbert", h}, {"generated_in_degree_1", g.surjective()}};
              cases.push_back({{"group", group}, {"hilbert", h}, {"identified", pair_json(try_identify(h))}});
              return g.surjective() && h == veronese_hilbert(m, 1, 3);
            });
  }
  report["cases"] = cases;
  return finish(std::move(report), std::move(c.list()));
}

// ---- output ----------------------------------------------------------------

void write_atomic(const std::filesystem::path& path, const std::string& data) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << data;
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

struct Output {
  std::string format = "json";
  std::string out;
  std::string command;

  void emit(const nlohmann::json& json, const std::string& text, const std::string& csv = {}) const {
    std::string body;
    std::string ext = format;
    if (format == "json") body = json.dump(2) + "\n";
    else if (format == "text") body = text, ext = "txt";
    else body = csv;
    std::filesystem::path path = out;
    if (path.empty()) {
      if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) path = std::filesystem::path(dir) / (command + "." + ext);
    }
    if (path.empty()) std::cout << body;
    else write_atomic(path, body);
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::FuelExhausted:
    case Errc::SingularEvaluationMatrix:
    case Errc::BasisMismatch:
    case Errc::NotConfluent: return 1;
    default: return 2;
  }
}

IndexVector top_index(int n) { return minimal_coset_reps_alpha_n(n).back(); }

std::string preset_text(const PresetResult& r) {
  std::ostringstream os;
  for (const auto& c : r.claims) os << (c.ok ? "PASS " : "FAIL ") << c.name << "\n";
  os << (r.verified() ? "all claims verified" : "some claims failed") << "\n";
  if (r.report.contains("limitation")) os << "note: " << r.report["limitation"].get<std::string>() << "\n";
  return os.str();
}

std::string hilbert_csv(const std::vector<std::size_t>& h) {
  std::string s = "k,dim\n";
  for (std::size_t k = 0; k < h.size(); ++k) s += std::to_string(k) + "," + std::to_string(h[k]) + "\n";
  return s;
}

std::string expansion_text(const StdExpansion& e) {
  std::ostringstream os;
  for (const auto& [m, c] : e) {
    os << to_string(c);
    for (const auto& r : m) os << " (" << format_int_list(r) << ")";
    os << "\n";
  }
  if (e.empty()) os << "0\n";
  return os.str();
}

}  // namespace

bool PresetResult::verified() const {
  return !claims.empty() && std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.ok; });
}

std::vector<std::string> preset_names() { return {"spin8", "spin8n", "p-alpha1", "sp"}; }

PresetResult reproduce(const std::string& name, int n, std::uint64_t seed) {
  if (name == "spin8") return preset_spin8(seed);
  if (name == "spin8n") return preset_spin8n(n, seed);
  if (name == "p-alpha1") return preset_omega_one(GroupType::D, seed);
  if (name == "sp") return preset_omega_one(GroupType::C, seed);
  throw Error(Errc::ParseError, "unknown preset '" + name + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"spinquot: torus quotients of Schubert varieties in orthogonal Grassmannians"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for random evaluation points")->capture_default_str();
  app.add_option("--format", output.format, "report format")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->capture_default_str();
  app.add_option("--out", output.out, std::string("report path (default: $") + kOutDirEnv + "/<command>.<ext> or stdout)");

  int n = 4, degree = 1, max_degree = 4, max_gen_degree = 1, step = 1, trials = 20;
  std::string w_text, shape = "omega_n", type_text = "D", rows_text, method = "symbolic", system, generators_file;
  std::string preset_name;

  auto ring_opts = [&](CLI::App* sub) {
    sub->add_option("--n", n, "rank N (index vectors have N entries)")->capture_default_str();
    sub->add_option("--w", w_text, "Schubert index, comma separated (default: whole space)");
    sub->add_option("--shape", shape, "omega_n or omega_1")->check(CLI::IsMember({"omega_n", "omega_1"}));
    sub->add_option("--type", type_text, "group type for omega_1 (D or C)")->check(CLI::IsMember({"D", "C"}));
    sub->add_option("--step", step, "Veronese step: R_k uses tableaux of degree step*k")->check(CLI::PositiveNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "list a standard monomial basis");
  ring_opts(enumerate);
  enumerate->add_option("--degree", degree, "tableau degree k")->check(CLI::PositiveNumber);

  auto* straighten = app.add_subcommand("straighten", "expand a product of Pfaffian coordinates");
  straighten->add_option("--n", n, "rank N")->capture_default_str();
  straighten->add_option("--rows", rows_text, "rows separated by ';', entries by ','")->required();
  straighten->add_option("--w", w_text, "restrict to the Schubert variety X(w)");
  straighten->add_option("--method", method, "symbolic, interpolation or both")
      ->check(CLI::IsMember({"symbolic", "interpolation", "both"}));

  auto* hilb = app.add_subcommand("hilbert", "Hilbert function of the invariant ring");
  ring_opts(hilb);
  hilb->add_option("--max-degree", max_degree, "largest k")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("check-generation", "test generation in degrees <= d");
  ring_opts(gen);
  gen->add_option("--max-degree", max_degree, "largest k")->check(CLI::PositiveNumber);
  gen->add_option("--max-gen-degree", max_gen_degree, "generator degree bound d")->check(CLI::PositiveNumber);
  gen->add_option("--generators", generators_file, "JSON array of generator tableaux")->check(CLI::ExistingFile);

  auto* rel = app.add_subcommand("relations", "relations among generators in degree k");
  ring_opts(rel);
  rel->add_option("--degree", degree, "degree k")->check(CLI::PositiveNumber);
  rel->add_option("--generators", generators_file, "JSON array of generator tableaux")->check(CLI::ExistingFile);

  auto* diamond = app.add_subcommand("diamond", "confluence check of a quadratic reduction system");
  diamond->add_option("--system", system, "preset name or path to a text/JSON system")->required();
  diamond->add_option("--max-degree", max_degree, "largest degree for normal form counts");

  auto* verify = app.add_subcommand("verify-pfaffian", "randomized checks of Pfaffian identities");
  verify->add_option("--n", n, "matrix size")->check(CLI::Range(1, 20));
  verify->add_option("--trials", trials, "number of random points")->check(CLI::PositiveNumber);

  auto* repro = app.add_subcommand("reproduce", "re-verify a family of published claims");
  repro->add_option("preset", preset_name, "spin8, spin8n, p-alpha1 or sp")
      ->required()
      ->check(CLI::IsMember(preset_names()));
  repro->add_option("--n", n, "Spin(8n) parameter for spin8n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    output.command = app.get_subcommands().front()->get_name();
    const bool csv = output.format == "csv";
    if (csv && !hilb->parsed()) throw UsageError("CSV output is only available for hilbert");

    auto ring_spec = [&](int k_max) {
      if (shape == "omega_1") {
        if (step != 1) throw UsageError("--step applies to omega_n rings only");
        return omega_one_spec(type_text == "C" ? GroupType::C : GroupType::D, n, k_max);
      }
      return omega_n_spec(n, w_text.empty() ? top_index(n) : parse_int_list(w_text), k_max, step);
    };
    auto load_generators = [&]() -> std::optional<std::vector<Tableau>> {
      if (generators_file.empty()) return std::nullopt;
      std::ifstream in(generators_file);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
      }
      std::vector<Tableau> g;
      for (const auto& t : j) g.push_back(tableau_from_json(t));
      return g;
    };

    if (enumerate->parsed()) {
      const RingSpec spec = ring_spec(std::max(degree, 1));
      std::vector<Tableau> basis = spec.kind == RingKind::OmegaN
                                       ? enumerate_basis_omega_n(spec.n, spec.w, degree * spec.step)
                                       : enumerate_basis_omega_1(spec.type, spec.n, degree);
      nlohmann::json list = nlohmann::json::array();
      std::string text;
      for (const auto& t : basis) {
        list.push_back(to_json(t));
        text += to_text(t) + "\n";
      }
      output.emit({{"spec", to_json(spec)}, {"degree", degree}, {"count", basis.size()}, {"basis", list}, {"seed", seed}},
                  text);
      return 0;
    }

    if (straighten->parsed()) {
      Monomial m;
      std::stringstream ss(rows_text);
      std::string part;
      while (std::getline(ss, part, ';'))
        if (part.find_first_not_of(" \t") != std::string::npos) m.push_back(parse_int_list(part));
      if (m.empty()) throw UsageError("--rows is empty");
      std::sort(m.begin(), m.end());
      const IndexVector w = w_text.empty() ? top_index(n) : parse_int_list(w_text);
      Straightener st(n);
      StdExpansion sym, interp;
      if (method != "interpolation") sym = w_text.empty() ? st.straighten(m) : st.straighten(m, &w);
      if (method != "symbolic") {
        Interpolator in(n, w, seed);
        interp = in.expand(m);
      }
      const bool agree = method != "both" || sym == interp;
      const StdExpansion& result = method == "interpolation" ? interp : sym;
      const auto& stats = st.stats();
      output.emit({{"n", n},
                   {"rows", m},
                   {"w", w},
                   {"method", method},
                   {"seed", seed},
                   {"expansion", to_json(result)},
                   {"methods_agree", agree},
                   {"stats",
                    {{"greedy_steps", stats.greedy_steps},
                     {"class_solves", stats.class_solves},
                     {"monomial_steps", stats.monomial_steps},
                     {"max_depth", stats.max_depth}}}},
                  expansion_text(result));
      return agree ? 0 : 1;
    }

    if (hilb->parsed()) {
      const RingSpec spec = ring_spec(max_degree);
      const auto h = hilbert(spec);
      const auto id = try_identify(h);
      std::ostringstream text;
      for (std::size_t k = 0; k < h.size(); ++k) text << "k=" << k << " dim=" << h[k] << "\n";
      output.emit({{"spec", to_json(spec)},
                   {"seed", seed},
                   {"hilbert", h},
                   {"generation", nullptr},
                   {"relations", nlohmann::json::array()},
                   {"identified", pair_json(id)}},
                  text.str(), hilbert_csv(h));
      return 0;
    }

    if (gen->parsed()) {
      const RingSpec spec = ring_spec(max_degree);
      if (max_gen_degree > max_degree) throw UsageError("--max-gen-degree exceeds --max-degree");
      const auto h = hilbert(spec);
      const auto g = check_generation(spec, max_gen_degree, load_generators());
      std::ostringstream text;
      for (const auto& d : g.per_degree)
        text << "k=" << d.k << " dim=" << d.dim << " span=" << d.span << (d.surjective ? " ok" : " MISSING") << "\n";
      text << (g.surjective() ? "generated" : "not generated") << " in degrees <= " << g.d << "\n";
      output.emit({{"spec", to_json(spec)},
                   {"seed", seed},
                   {"hilbert", h},
                   {"generation", to_json(g)},
                   {"relations", nlohmann::json::array()},
                   {"identified", pair_json(try_identify(h))}},
                  text.str());
      return g.surjective() ? 0 : 1;
    }

    if (rel->parsed()) {
      const RingSpec spec = ring_spec(std::max(degree, 1));
      const auto r = relations_in_degree(spec, degree, load_generators());
      std::ostringstream text;
      text << r.kernel.size() << " relation(s) in degree " << degree << " among " << r.generators.size()
           << " generators\n";
      for (const auto& k : r.kernel) {
        for (const auto& [p, c] : k) {
          text << " " << (sgn(c) > 0 ? "+" : "") << to_string(c) << "*g";
          for (std::size_t i = 0; i < r.products[p].size(); ++i) text << (i ? "*g" : "") << r.products[p][i];
        }
        text << " = 0\n";
      }
      const auto h = hilbert(spec);
      output.emit({{"spec", to_json(spec)},
                   {"seed", seed},
                   {"hilbert", h},
                   {"generation", nullptr},
                   {"relations", to_json(r)},
                   {"identified", pair_json(try_identify(h))}},
                  text.str());
      return 0;
    }

    if (diamond->parsed()) {
      ReductionSystem sys;
      const auto names = spinquot::preset_names();
      if (std::find(names.begin(), names.end(), system) != names.end()) {
        sys = preset(system);
      } else {
        std::ifstream in(system);
        if (!in) throw UsageError("no preset or file named '" + system + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string content = buf.str();
        const auto first = content.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && content[first] == '{') {
          try {
            sys = system_from_json(nlohmann::json::parse(content));
          } catch (const nlohmann::json::exception& e) {
            throw Error(Errc::ParseError, e.what());
          }
        } else {
          sys = parse_system(content, std::filesystem::path(system).stem().string());
        }
      }
      const auto r = check_confluence(sys);
      nlohmann::json j = to_json(r, sys);
      j["seed"] = seed;
      std::ostringstream text;
      text << sys.name << ": " << r.ambiguities.size() << " ambiguities, "
           << (r.confluent ? "confluent" : "NOT confluent") << "\n";
      for (const auto& a : r.ambiguities) {
        text << "  " << format_monomial(a.monomial) << (a.resolved ? "" : "  <-- conflict") << "\n";
        for (const auto& red : a.resolutions) {
          text << "    " << format_monomial(red.start);
          for (const auto& s : red.steps) text << " -> " << format_monomial(s.result);
          text << "\n";
        }
      }
      if (r.confluent) {
        std::vector<std::size_t> counts;
        for (int k = 0; k <= max_degree; ++k) counts.push_back(normal_monomials(sys, k).size());
        j["normal_form_counts"] = counts;
        j["identified"] = pair_json(try_identify(counts));
      }
      output.emit(j, text.str());
      return r.confluent ? 0 : 1;
    }

    if (verify->parsed()) {
      std::mt19937_64 rng(seed);
      std::size_t det_ok = 0, match_ok = 0, exch_ok = 0, exch_total = 0;
      for (int t = 0; t < trials; ++t) {
        const SkewPoint p = random_skew_point(n, rng);
        const Rational pf = pfaffian(p);
        Matrix m(n, std::vector<Rational>(n));
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = p.at(i, j);
        if (pf * pf == determinant(m)) ++det_ok;
        SubsetIndex all(n);
        for (int i = 0; i < n; ++i) all[i] = i + 1;
        if (n > 12 || pfaffian_by_matchings(p, all) == pf) ++match_ok;
        // Exchange identity on a random pair of odd subsets.
        std::bernoulli_distribution coin(0.5);
        SubsetIndex a, b;
        for (int i = 1; i <= n; ++i) {
          if (coin(rng)) a.push_back(i);
          if (coin(rng)) b.push_back(i);
        }
        auto make_odd = [&](SubsetIndex& s) {
          if (s.size() % 2 == 1) return;
          if (s.empty() || s.back() < n) s.push_back(n);
          else s.pop_back();
        };
        make_odd(a);
        make_odd(b);
        ++exch_total;
        if (sgn(evaluate(exchange_terms(a, b), p)) == 0) ++exch_ok;
      }
      const bool ok = det_ok == static_cast<std::size_t>(trials) && match_ok == static_cast<std::size_t>(trials) &&
                      exch_ok == exch_total;
      std::ostringstream text;
      text << "Pf^2 = det: " << det_ok << "/" << trials << "\nPf = matching sum: " << match_ok << "/" << trials
           << "\nexchange identity: " << exch_ok << "/" << exch_total << "\n";
      output.emit({{"n", n},
                   {"trials", trials},
                   {"seed", seed},
                   {"pf_squared_equals_det", det_ok},
                   {"pf_equals_matching_sum", match_ok},
                   {"exchange_identity", exch_ok},
                   {"ok", ok}},
                  text.str());
      return ok ? 0 : 1;
    }

    if (repro->parsed()) {
      if (preset_name == "spin8n" && n != 2) {
        if (!repro->count("--n")) n = 2;
        else throw UsageError(std::string("spin8n is only reproducible for --n 2. ") + kGeneralRankNote);
      }
      const PresetResult r = reproduce(preset_name, n, seed);
      output.emit(r.report, preset_text(r));
      return r.verified() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace spinquot::cli
