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

#include "spinquot/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <set>
#include <sstream>

#include "spinquot/errors.hpp"

namespace spinquot {

namespace {

VarMonomial apply_rule(const Rule& r, const VarMonomial& m) {
  VarMonomial out = m;
  for (int x : r.lhs) out.erase(std::find(out.begin(), out.end(), x));
  out.insert(out.end(), r.rhs.begin(), r.rhs.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> applicable(const VarMonomial& m, const ReductionSystem& sys) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sys.rules.size(); ++i)
    if (divides(sys.rules[i].lhs, m)) out.push_back(i);
  return out;
}

Rule make_rule(int a, int b, int c, int d) {
  Rule r{{a, b}, {c, d}};
  std::sort(r.lhs.begin(), r.lhs.end());
  std::sort(r.rhs.begin(), r.rhs.end());
  return r;
}

}  // namespace

std::vector<int> ReductionSystem::vars() const {
  std::vector<int> v(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) v[i] = first_var + i;
  return v;
}

std::vector<std::size_t> ReductionSystem::rhs_reducible() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (const auto& r : rules)
      if (divides(r.lhs, rules[i].rhs)) {
        out.push_back(i);
        break;
      }
  return out;
}

void validate(const ReductionSystem& sys) {
  std::set<VarMonomial> seen;
  for (const auto& r : sys.rules) {
    if (r.lhs.size() != 2 || r.rhs.size() != 2) throw Error(Errc::ParseError, "rules must be quadratic");
    for (const auto* side : {&r.lhs, &r.rhs})
      for (int x : *side)
        if (x < sys.first_var || x >= sys.first_var + sys.nvars)
          throw Error(Errc::IndexOutOfRange, "variable z_" + std::to_string(x) + " out of range");
    if (r.lhs == r.rhs) throw Error(Errc::ParseError, "rule " + format_monomial(r.lhs) + " is trivial");
    if (!seen.insert(r.lhs).second) throw Error(Errc::ParseError, "duplicate lhs " + format_monomial(r.lhs));
  }
}

bool divides(const VarMonomial& a, const VarMonomial& m) {
  return std::includes(m.begin(), m.end(), a.begin(), a.end());
}

bool is_normal(const VarMonomial& m, const ReductionSystem& sys) { return applicable(m, sys).empty(); }

Reduction reduce(const VarMonomial& m, const ReductionSystem& sys, std::mt19937_64* rng, std::size_t fuel) {
  Reduction red;
  red.start = m;
  std::sort(red.start.begin(), red.start.end());
  VarMonomial cur = red.start;
  for (;;) {
    const auto app = applicable(cur, sys);
    if (app.empty()) break;
    if (red.steps.size() >= fuel)
      throw Error(Errc::FuelExhausted, "no normal form for " + format_monomial(red.start) + " within " +
                                           std::to_string(fuel) + " steps");
    std::size_t pick = app.front();
    if (rng) pick = app[std::uniform_int_distribution<std::size_t>(0, app.size() - 1)(*rng)];
    cur = apply_rule(sys.rules[pick], cur);
    red.steps.push_back({pick, cur});
  }
  red.result = cur;
  return red;
}

VarMonomial normal_form(const VarMonomial& m, const ReductionSystem& sys) { return reduce(m, sys).result; }

std::vector<VarMonomial> overlaps(const ReductionSystem& sys) {
  std::vector<VarMonomial> out;
  for (const auto& m : monomials_of_degree(sys, 3))
    if (applicable(m, sys).size() >= 2) out.push_back(m);
  return out;
}

Ambiguity resolve(const VarMonomial& m, const ReductionSystem& sys) {
  Ambiguity a;
  a.monomial = m;
  std::set<VarMonomial> results;
  for (std::size_t i : applicable(m, sys)) {
    const VarMonomial first = apply_rule(sys.rules[i], m);
    Reduction rest = reduce(first, sys);
    Reduction full;
    full.start = m;
    full.result = rest.result;
    full.steps.push_back({i, first});
    full.steps.insert(full.steps.end(), rest.steps.begin(), rest.steps.end());
    results.insert(full.result);
    a.resolutions.push_back(std::move(full));
  }
  a.resolved = results.size() <= 1;
  return a;
}

ConfluenceReport check_confluence(const ReductionSystem& sys) {
  validate(sys);
  ConfluenceReport r;
  for (const auto& m : overlaps(sys)) r.ambiguities.push_back(resolve(m, sys));
  std::set<VarMonomial> done;
  for (const auto& a : r.ambiguities) done.insert(a.monomial);
  std::vector<VarMonomial> extra;
  for (const auto& rule : sys.rules) {
    for (int v : sys.vars()) {
      VarMonomial m = rule.lhs;
      m.push_back(v);
      std::sort(m.begin(), m.end());
      extra.push_back(m);
    }
    VarMonomial sq = rule.lhs;
    sq.insert(sq.end(), rule.lhs.begin(), rule.lhs.end());
    std::sort(sq.begin(), sq.end());
    extra.push_back(sq);
  }
  for (const auto& m : extra)
    if (done.insert(m).second) r.extra_checks.push_back(resolve(m, sys));
  auto ok = [](const Ambiguity& a) { return a.resolved; };
  r.confluent = std::all_of(r.ambiguities.begin(), r.ambiguities.end(), ok) &&
                std::all_of(r.extra_checks.begin(), r.extra_checks.end(), ok);
  return r;
}

std::vector<VarMonomial> monomials_of_degree(const ReductionSystem& sys, int k) {
  std::vector<VarMonomial> out;
  VarMonomial cur;
  const auto vars = sys.vars();
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < vars.size(); ++i) {
      cur.push_back(vars[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<VarMonomial> normal_monomials(const ReductionSystem& sys, int k) {
  std::vector<VarMonomial> out;
  for (auto& m : monomials_of_degree(sys, k))
    if (is_normal(m, sys)) out.push_back(std::move(m));
  return out;
}

std::size_t normal_form_count(const ReductionSystem& sys, int k) {
  if (!check_confluence(sys).confluent) throw Error(Errc::NotConfluent, sys.name);
  return normal_monomials(sys, k).size();
}

std::string format_monomial(const VarMonomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += ' ';
    out += "z_" + std::to_string(m[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

VarMonomial parse_monomial(const std::string& text) {
  static const std::regex token(R"(z_?\{?(\d+)\}?(?:\^(\d+))?)");
  VarMonomial m;
  std::string rest;
  auto begin = std::sregex_iterator(text.begin(), text.end(), token);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    rest += text.substr(last, static_cast<std::size_t>(it->position()) - last);
    last = static_cast<std::size_t>(it->position() + it->length());
    const int var = std::stoi((*it)[1]);
    const int power = (*it)[2].matched ? std::stoi((*it)[2]) : 1;
    for (int p = 0; p < power; ++p) m.push_back(var);
  }
  rest += text.substr(last);
  if (rest.find_first_not_of(" \t*") != std::string::npos || m.empty())
    throw Error(Errc::ParseError, "bad monomial '" + text + "'");
  std::sort(m.begin(), m.end());
  return m;
}

ReductionSystem parse_system(const std::string& text, const std::string& name) {
  ReductionSystem sys;
  sys.name = name;
  std::istringstream in(text);
  std::string line;
  int lo = 1 << 30, hi = -1;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw Error(Errc::ParseError, "missing '->' in '" + line + "'");
    Rule r{parse_monomial(line.substr(0, arrow)), parse_monomial(line.substr(arrow + 2))};
    for (const auto* side : {&r.lhs, &r.rhs})
      for (int x : *side) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
    sys.rules.push_back(std::move(r));
  }
  if (sys.rules.empty()) throw Error(Errc::ParseError, "empty reduction system");
  sys.first_var = std::min(lo, 1);
  sys.nvars = hi - sys.first_var + 1;
  validate(sys);
  return sys;
}

std::string to_text(const ReductionSystem& sys) {
  std::string out;
  for (const auto& r : sys.rules) out += format_monomial(r.lhs) + " -> " + format_monomial(r.rhs) + "\n";
  return out;
}

nlohmann::json to_json(const ReductionSystem& sys) {
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& r : sys.rules) rules.push_back({{"lhs", r.lhs}, {"rhs", r.rhs}});
  nlohmann::json bindings = nlohmann::json::object();
  for (const auto& [v, e] : sys.bindings) bindings["z_" + std::to_string(v)] = e;
  return {{"name", sys.name}, {"first_var", sys.first_var}, {"nvars", sys.nvars}, {"rules", rules},
          {"bindings", bindings}};
}

ReductionSystem system_from_json(const nlohmann::json& j) {
  try {
    ReductionSystem sys;
    sys.name = j.value("name", std::string("custom"));
    sys.first_var = j.value("first_var", 1);
    sys.nvars = j.at("nvars").get<int>();
    for (const auto& r : j.at("rules")) {
      Rule rule{r.at("lhs").get<VarMonomial>(), r.at("rhs").get<VarMonomial>()};
      std::sort(rule.lhs.begin(), rule.lhs.end());
      std::sort(rule.rhs.begin(), rule.rhs.end());
      sys.rules.push_back(std::move(rule));
    }
    if (j.contains("bindings"))
      for (const auto& [k, v] : j.at("bindings").items()) sys.bindings[parse_monomial(k).front()] = v.get<std::string>();
    validate(sys);
    return sys;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

nlohmann::json to_json(const Reduction& r, const ReductionSystem& sys) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"rule", format_monomial(sys.rules[s.rule].lhs) + " -> " + format_monomial(sys.rules[s.rule].rhs)},
                     {"result", format_monomial(s.result)}});
  return {{"start", format_monomial(r.start)}, {"normal_form", format_monomial(r.result)}, {"steps", steps}};
}

nlohmann::json to_json(const ConfluenceReport& r, const ReductionSystem& sys) {
  auto amb = [&](const std::vector<Ambiguity>& list) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& a : list) {
      nlohmann::json res = nlohmann::json::array();
      for (const auto& red : a.resolutions) res.push_back(to_json(red, sys));
      out.push_back({{"monomial", format_monomial(a.monomial)}, {"resolved", a.resolved}, {"resolutions", res}});
    }
    return out;
  };
  nlohmann::json warnings = nlohmann::json::array();
  for (std::size_t i : sys.rhs_reducible())
    warnings.push_back("rhs of " + format_monomial(sys.rules[i].lhs) + " -> " + format_monomial(sys.rules[i].rhs) +
                       " is reducible");
  return {{"system", to_json(sys)},
          {"confluent", r.confluent},
          {"ambiguity_count", r.ambiguities.size()},
          {"ambiguities", amb(r.ambiguities)},
          {"extra_checks", amb(r.extra_checks)},
          {"warnings", warnings}};
}

std::vector<std::string> preset_names() { return {"veronese-1-2", "veronese-2-2", "veronese-3-2"}; }

ReductionSystem preset(const std::string& name) {
  ReductionSystem sys;
  sys.name = name;
  if (name == "veronese-1-2") {
    // Quotient of X(w_2): (P^1, O(2)).
    sys.first_var = 0;
    sys.nvars = 3;
    sys.rules = {make_rule(0, 2, 1, 1)};
    sys.bindings = {{0, "X1*X1"}, {1, "X1*X2"}, {2, "X2*X2"}};
  } else if (name == "veronese-3-2") {
    // Quotient of X(w_4): (P^3, O(2)).
    sys.nvars = 10;
    const int r[][4] = {{1, 2, 5, 5},  {1, 3, 6, 6},  {1, 4, 7, 7},  {1, 8, 5, 6},  {1, 9, 5, 7},
                        {1, 10, 6, 7}, {2, 3, 8, 8},  {2, 4, 9, 9},  {2, 6, 5, 8},  {2, 7, 5, 9},
                        {2, 10, 8, 9}, {3, 4, 10, 10}, {3, 5, 6, 8}, {3, 7, 6, 10}, {3, 9, 8, 10},
                        {4, 5, 7, 9},  {4, 6, 7, 10}, {4, 8, 9, 10}, {5, 10, 6, 9}, {6, 9, 7, 8}};
    for (const auto& q : r) sys.rules.push_back(make_rule(q[0], q[1], q[2], q[3]));
    sys.bindings = {{1, "X1*X1"}, {2, "X2*X2"}, {3, "X3*X3"}, {4, "X4*X4"}, {5, "X1*X2"},
                    {6, "X1*X3"}, {7, "X1*X4"}, {8, "X2*X3"}, {9, "X2*X4"}, {10, "X3*X4"}};
  } else if (name == "veronese-2-2") {
    // Quotient of X(w_5): (P^2, O(2)).
    sys.nvars = 6;
    sys.rules = {make_rule(1, 2, 4, 4), make_rule(1, 3, 5, 5), make_rule(2, 3, 6, 6),
                 make_rule(1, 6, 4, 5), make_rule(2, 5, 4, 6), make_rule(3, 4, 5, 6)};
    sys.bindings = {{1, "X1*X1"}, {2, "X3*X3"}, {3, "X5*X5"}, {4, "X1*X3"}, {5, "X1*X5"}, {6, "X3*X5"}};
  } else {
    throw Error(Errc::ParseError, "unknown reduction system '" + name + "'");
  }
  validate(sys);
  return sys;
}

}  // namespace spinquot
