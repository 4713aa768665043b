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

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace spinquot::cli {

// One verified statement inside a report.
struct Claim {
  std::string name;
  bool ok = false;
  nlohmann::json detail;
};

struct PresetResult {
  nlohmann::json report;
  std::vector<Claim> claims;
  bool verified() const;
};

std::vector<std::string> preset_names();
// n is only consulted by the spin8n preset.
PresetResult reproduce(const std::string& preset, int n, std::uint64_t seed);

// Full command-line front end; returns the process exit code
// (0 success, 1 verification failure, 2 usage or I/O error).
int run(int argc, char** argv);

}  // namespace spinquot::cli
