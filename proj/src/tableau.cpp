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

#include "spinquot/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "spinquot/errors.hpp"

namespace spinquot {

int Tableau::degree() const {
  return shape == Shape::OmegaN ? static_cast<int>(rows.size()) / 2
                                : static_cast<int>(entries.size()) / 4;
}

Tableau make_omega_n(int n, std::vector<IndexVector> rows) {
  Tableau t;
  t.n = n;
  t.shape = Shape::OmegaN;
  t.rows = std::move(rows);
  return t;
}

Tableau make_omega_one(GroupType type, int n, std::vector<int> entries) {
  Tableau t;
  t.n = n;
  t.shape = Shape::OmegaOne;
  t.type = type;
  t.entries = std::move(entries);
  return t;
}

static void check_well_formed(const Tableau& t) {
  if (t.shape == Shape::OmegaN) {
    for (const auto& r : t.rows)
      if (static_cast<int>(r.size()) != t.n) throw Error(Errc::MalformedShape, "row length differs from n");
  }
}

bool is_standard(const Tableau& t) {
  check_well_formed(t);
  if (t.shape == Shape::OmegaOne) {
    return std::is_sorted(t.entries.begin(), t.entries.end());
  }
  for (const auto& r : t.rows)
    for (std::size_t j = 1; j < r.size(); ++j)
      if (r[j - 1] >= r[j]) return false;
  for (std::size_t i = 1; i < t.rows.size(); ++i)
    if (!bruhat_leq(t.rows[i - 1], t.rows[i])) return false;
  return true;
}

static bool spin_row(const IndexVector& r, int n) {
  std::vector<int> seen(2 * n + 2, 0);
  int high = 0;
  for (int x : r) {
    if (x < 1 || x > 2 * n) return false;
    seen[x] = 1;
    if (x > n) ++high;
  }
  for (int t = 1; t <= n; ++t)
    if (seen[t] + seen[2 * n + 1 - t] != 1) return false;
  return high % 2 == 0;
}

bool satisfies_shape_conditions(const Tableau& t) {
  check_well_formed(t);
  if (t.shape == Shape::OmegaN) {
    return std::all_of(t.rows.begin(), t.rows.end(), [&](const IndexVector& r) { return spin_row(r, t.n); });
  }
  if (t.entries.size() % 2 != 0) return false;
  for (std::size_t i = 0; i + 1 < t.entries.size(); i += 2)
    if (t.entries[i] != t.entries[i + 1]) return false;
  for (int x : t.entries) {
    if (x < 1 || x > 2 * t.n) return false;
    if (t.type == GroupType::D && (x == t.n || x == t.n + 1)) return false;
  }
  return true;
}

std::map<int, int> weight_counter(const Tableau& t) {
  std::map<int, int> c;
  auto add = [&](int x) {
    if (x < 1 || x > 2 * t.n) throw Error(Errc::EntryOutOfRange, std::to_string(x));
    ++c[x];
  };
  if (t.shape == Shape::OmegaN) {
    for (const auto& r : t.rows)
      for (int x : r) add(x);
  } else {
    for (int x : t.entries) add(x);
  }
  return c;
}

WeightVector weight(const Tableau& t) {
  auto c = weight_counter(t);
  WeightVector w{std::vector<Rational>(t.n, Rational(0))};
  for (int j = 1; j <= t.n; ++j) {
    w.coeffs[j - 1] = Rational(c[j] - c[2 * t.n + 1 - j], 2);
    w.coeffs[j - 1].canonicalize();
  }
  return w;
}

bool is_t_invariant(const Tableau& t) {
  auto c = weight_counter(t);
  for (int j = 1; j <= t.n; ++j)
    if (c[j] != c[2 * t.n + 1 - j]) return false;
  return true;
}

// Later rows dominate `last` entrywise, so at most #{j : last[j] <= v}
// entries <= v per remaining row.
static bool can_complete(const IndexVector& last, const std::vector<int>& count, int target, int remaining) {
  std::size_t pos = 0;
  int missing = 0, total = 0;
  for (int v = 1; v < static_cast<int>(count.size()); ++v) total += target - count[v];
  for (int v = 1; v < static_cast<int>(count.size()); ++v) {
    missing += target - count[v];
    while (pos < last.size() && last[pos] <= v) ++pos;
    if (missing > remaining * static_cast<int>(pos)) return false;
    // Entries > v: at least #{j : last[j] > v} per remaining row.
    if (total - missing < remaining * static_cast<int>(last.size() - pos)) return false;
  }
  return true;
}

std::vector<Tableau> enumerate_basis_omega_n(int n, const IndexVector& w, int k) {
  const auto reps = minimal_coset_reps_alpha_n(n);
  if (std::find(reps.begin(), reps.end(), w) == reps.end())
    throw Error(Errc::InvalidSchubertIndex, format_int_list(w));
  std::vector<IndexVector> allowed;
  for (const auto& r : reps)
    if (bruhat_leq(r, w)) allowed.push_back(r);

  // Zero weight forces every value to occur exactly k times.
  std::vector<Tableau> out;
  std::vector<int> count(2 * n + 1, 0);
  std::vector<IndexVector> chain;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chain.size()) == 2 * k) {
      out.push_back(make_omega_n(n, chain));
      return;
    }
    if (!chain.empty() && !can_complete(chain.back(), count, k, 2 * k - static_cast<int>(chain.size()))) return;
    for (std::size_t i = from; i < allowed.size(); ++i) {
      const auto& r = allowed[i];
      if (!chain.empty() && !bruhat_leq(chain.back(), r)) continue;
      bool ok = true;
      for (int x : r)
        if (count[x] >= k) {
          ok = false;
          break;
        }
      if (!ok) continue;
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

std::vector<Tableau> enumerate_basis_omega_1(GroupType type, int n, int k) {
  if ((type == GroupType::D && n < 4) || (type == GroupType::C && n < 2))
    throw Error(Errc::UnsupportedRank, std::to_string(n));
  std::vector<int> values;
  for (int v = 1; v <= 2 * n; ++v) {
    if (type == GroupType::D && (v == n || v == n + 1)) continue;
    values.push_back(v);
  }
  // Non-decreasing sequences of 2k pair values with balanced counts.
  std::vector<Tableau> out;
  std::vector<int> count(2 * n + 2, 0), seq;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(seq.size()) == 2 * k) {
      for (int j = 1; j <= n; ++j)
        if (count[j] != count[2 * n + 1 - j]) return;
      std::vector<int> entries;
      for (int v : seq) {
        entries.push_back(v);
        entries.push_back(v);
      }
      out.push_back(make_omega_one(type, n, entries));
      return;
    }
    for (std::size_t i = from; i < values.size(); ++i) {
      const int v = values[i];
      if (count[v] >= k) continue;
      ++count[v];
      seq.push_back(v);
      rec(i);
      seq.pop_back();
      --count[v];
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<Tableau, Tableau>> find_factor(const Tableau& t, int d, int step) {
  if (t.degree() <= d) {
    Tableau empty = t;
    empty.rows.clear();
    empty.entries.clear();
    return std::make_pair(t, empty);
  }
  const bool omega_n = t.shape == Shape::OmegaN;
  // Units: rows for OmegaN, trivial pairs for OmegaOne.
  const std::size_t units = omega_n ? t.rows.size() : t.entries.size() / 2;
  const std::size_t per_degree = 2;
  auto build = [&](const std::vector<bool>& pick, bool want) {
    Tableau out = t;
    out.rows.clear();
    out.entries.clear();
    for (std::size_t u = 0; u < units; ++u) {
      if (pick[u] != want) continue;
      if (omega_n) {
        out.rows.push_back(t.rows[u]);
      } else {
        out.entries.push_back(t.entries[2 * u]);
        out.entries.push_back(t.entries[2 * u + 1]);
      }
    }
    return out;
  };
  for (int deg = step; deg <= d; deg += step) {
    const std::size_t size = per_degree * static_cast<std::size_t>(deg);
    if (size >= units) break;
    std::vector<bool> pick(units, false);
    std::fill(pick.end() - static_cast<long>(size), pick.end(), true);
    do {
      Tableau f = build(pick, true);
      if (!is_t_invariant(f)) continue;
      Tableau rest = build(pick, false);
      if (is_standard(f) && is_standard(rest) && is_t_invariant(rest)) return std::make_pair(f, rest);
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

Tableau multiply(const Tableau& a, const Tableau& b) {
  if (a.shape != b.shape || a.n != b.n) throw Error(Errc::MalformedShape, "incompatible factors");
  Tableau out = a;
  if (a.shape == Shape::OmegaN) {
    out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
    std::sort(out.rows.begin(), out.rows.end());
  } else {
    out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
    std::sort(out.entries.begin(), out.entries.end());
  }
  return out;
}

std::string to_text(const Tableau& t) {
  std::ostringstream os;
  os << "n=" << t.n << " k=" << t.degree() << " shape=" << (t.shape == Shape::OmegaN ? "omega_n" : "omega_1");
  if (t.shape == Shape::OmegaOne) os << " type=" << (t.type == GroupType::D ? "D" : "C");
  os << "\n";
  if (t.shape == Shape::OmegaN) {
    for (const auto& r : t.rows) os << format_int_list(r) << "\n";
  } else {
    for (int x : t.entries) os << x << "\n";
  }
  return os.str();
}

Tableau tableau_from_text(const std::string& text, GroupType type) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw Error(Errc::ParseError, "empty tableau text");
  int n = -1;
  Shape shape = Shape::OmegaN;
  std::istringstream hs(header);
  std::string field;
  while (hs >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw Error(Errc::ParseError, "bad header field '" + field + "'");
    const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
    if (key == "n") {
      n = std::stoi(value);
    } else if (key == "shape") {
      if (value == "omega_n") shape = Shape::OmegaN;
      else if (value == "omega_1") shape = Shape::OmegaOne;
      else throw Error(Errc::ParseError, "unknown shape '" + value + "'");
    } else if (key == "type") {
      type = value == "C" ? GroupType::C : GroupType::D;
    }
  }
  if (n < 1) throw Error(Errc::ParseError, "missing n in header");
  std::string line;
  Tableau t = shape == Shape::OmegaN ? make_omega_n(n, {}) : make_omega_one(type, n, {});
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto v = parse_int_list(line);
    if (shape == Shape::OmegaN) t.rows.push_back(v);
    else t.entries.insert(t.entries.end(), v.begin(), v.end());
  }
  check_well_formed(t);
  return t;
}

nlohmann::json to_json(const Tableau& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["k"] = t.degree();
  j["shape"] = t.shape == Shape::OmegaN ? "omega_n" : "omega_1";
  if (t.shape == Shape::OmegaN) {
    j["rows"] = t.rows;
  } else {
    j["type"] = t.type == GroupType::D ? "D" : "C";
    j["entries"] = t.entries;
  }
  return j;
}

Tableau tableau_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (j.at("shape").get<std::string>() == "omega_1") {
      const GroupType type = j.value("type", std::string("D")) == "C" ? GroupType::C : GroupType::D;
      return make_omega_one(type, n, j.at("entries").get<std::vector<int>>());
    }
    Tableau t = make_omega_n(n, j.at("rows").get<std::vector<IndexVector>>());
    check_well_formed(t);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace spinquot
