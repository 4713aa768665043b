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

#include <string>
#include <vector>

#include "spinquot/tableau.hpp"

namespace spinquot::catalog {

struct Named {
  std::string name;
  Tableau tableau;
};

// Spin(8): Gamma_1..Gamma_4 (Gamma_4 is the non-standard one).
std::vector<Named> spin8_gammas();

// Spin(8n) tableaux X_1..X_6, Y_1..Y_4, Z_1, Z_2 of rank N = 4n.
std::vector<Named> spin8n_tableaux(int n);
// w_1..w_6 in I_{4n,8n}.
std::vector<IndexVector> spin8n_schubert(int n);

const Tableau& find(const std::vector<Named>& list, const std::string& name);

// Column generator (j, j, 2n+1-j, 2n+1-j) of the omega_1 rings.
Tableau omega_one_generator(GroupType type, int n, int j);

}  // namespace spinquot::catalog
