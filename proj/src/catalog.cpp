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

#include "spinquot/catalog.hpp"

#include <algorithm>

#include "spinquot/errors.hpp"

namespace spinquot::catalog {

namespace {

// Rows agree with (1,3,5,...) or (2,4,6,...) away from a window of width 12
// around 4n; `mid` holds the window entries as offsets from 4n.
IndexVector row(int n, bool odd, const std::vector<int>& mid) {
  IndexVector r;
  if (odd) {
    for (int v = 1; v < 4 * n - 4; v += 2) r.push_back(v);
  } else {
    for (int v = 2; v < 4 * n - 5; v += 2) r.push_back(v);
  }
  for (int o : mid) r.push_back(4 * n + o);
  if (odd) {
    for (int v = 4 * n + 7; v < 8 * n; v += 2) r.push_back(v);
  } else {
    for (int v = 4 * n + 8; v <= 8 * n; v += 2) r.push_back(v);
  }
  return r;
}

struct RowSpec {
  bool odd;
  std::vector<int> mid;
};

}  // namespace

std::vector<Named> spin8_gammas() {
  return {{"Gamma1", make_omega_n(4, {{1, 2, 3, 4}, {5, 6, 7, 8}})},
          {"Gamma2", make_omega_n(4, {{1, 2, 5, 6}, {3, 4, 7, 8}})},
          {"Gamma3", make_omega_n(4, {{1, 3, 5, 7}, {2, 4, 6, 8}})},
          {"Gamma4", make_omega_n(4, {{1, 4, 6, 7}, {2, 3, 5, 8}})}};
}

std::vector<Named> spin8n_tableaux(int n) {
  if (n < 2) throw Error(Errc::UnsupportedRank, "Spin(8n) tableaux need n >= 2");
  const bool o = true, e = false;
  const std::vector<std::pair<std::string, std::vector<RowSpec>>> specs = {
      {"X1", {{o, {-3, -1, 1, 3, 5}}, {e, {-4, -2, 0, 2, 4, 6}}}},
      {"X2", {{o, {-4, -1, 1, 3, 4}}, {e, {-3, -2, 0, 2, 5, 6}}}},
      {"X3", {{o, {-3, -2, 1, 2, 5}}, {e, {-4, -1, 0, 3, 4, 6}}}},
      {"X4", {{o, {-4, -2, 1, 2, 4}}, {e, {-3, -1, 0, 3, 5, 6}}}},
      {"X5", {{o, {-3, -2, -1, 0, 5}}, {e, {-4, 1, 2, 3, 4, 6}}}},
      {"X6", {{o, {-4, -2, -1, 0, 4}}, {e, {-3, 1, 2, 3, 5, 6}}}},
      {"Y1", {{o, {-4, -3, -2, -1, 1}}, {o, {-2, 0, 2, 4, 5}}, {e, {-4, -1, 0, 3, 4, 6}}, {e, {-3, 1, 2, 3, 5, 6}}}},
      {"Y2", {{o, {-4, -3, -2, 0, 2}}, {o, {-2, -1, 1, 4, 5}}, {e, {-4, -1, 0, 3, 4, 6}}, {e, {-3, 1, 2, 3, 5, 6}}}},
      {"Y3", {{o, {-4, -3, -1, 0, 3}}, {o, {-2, -1, 1, 4, 5}}, {e, {-4, -2, 0, 2, 4, 6}}, {e, {-3, 1, 2, 3, 5, 6}}}},
      {"Y4", {{o, {-4, -3, 1, 2, 3}}, {o, {-2, -1, 1, 4, 5}}, {e, {-4, -2, 0, 2, 4, 6}}, {e, {-3, -1, 0, 3, 5, 6}}}},
      {"Z1",
       {{o, {-4, -3, -2, -1, 1}},
        {o, {-4, -1, 1, 3, 4}},
        {o, {-2, 0, 2, 4, 5}},
        {e, {-4, -2, 0, 2, 4, 6}},
        {e, {-3, -1, 0, 3, 5, 6}},
        {e, {-3, 1, 2, 3, 5, 6}}}},
      {"Z2",
       {{o, {-4, -3, -2, 0, 2}},
        {o, {-4, -1, 1, 3, 4}},
        {o, {-2, -1, 1, 4, 5}},
        {e, {-4, -2, 0, 2, 4, 6}},
        {e, {-3, -1, 0, 3, 5, 6}},
        {e, {-3, 1, 2, 3, 5, 6}}}},
  };
  std::vector<Named> out;
  for (const auto& [name, rows] : specs) {
    std::vector<IndexVector> r;
    for (const auto& s : rows) r.push_back(row(n, s.odd, s.mid));
    std::sort(r.begin(), r.end());
    out.push_back({name, make_omega_n(4 * n, r)});
  }
  return out;
}

std::vector<IndexVector> spin8n_schubert(int n) {
  if (n < 2) throw Error(Errc::UnsupportedRank, "w_1..w_6 need n >= 2");
  const int c = 4 * n;
  const std::vector<std::vector<int>> mids = {{c - 4, c - 2, c, c + 2, c + 4},     {c - 3, c - 2, c, c + 2, c + 5},
                                              {c - 4, c - 1, c, c + 3, c + 4},     {c - 3, c - 1, c, c + 3, c + 5},
                                              {c - 4, c + 1, c + 2, c + 3, c + 4}, {c - 3, c + 1, c + 2, c + 3, c + 5}};
  std::vector<IndexVector> out;
  for (const auto& mid : mids) {
    IndexVector w;
    for (int v = 2; v <= c - 6; v += 2) w.push_back(v);
    w.insert(w.end(), mid.begin(), mid.end());
    for (int v = c + 6; v <= 8 * n; v += 2) w.push_back(v);
    out.push_back(std::move(w));
  }
  return out;
}

const Tableau& find(const std::vector<Named>& list, const std::string& name) {
  for (const auto& x : list)
    if (x.name == name) return x.tableau;
  throw Error(Errc::ParseError, "unknown tableau " + name);
}

Tableau omega_one_generator(GroupType type, int n, int j) {
  return make_omega_one(type, n, {j, j, 2 * n + 1 - j, 2 * n + 1 - j});
}

}  // namespace spinquot::catalog
