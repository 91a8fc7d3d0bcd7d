// Copyright 2026 The snac-kinematics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "snac/bench.hpp"
#include "snac/sim.hpp"

namespace snac {

using ParsedConfig = std::variant<Scenario, BenchConfig>;

// A document with a [benchmark] section is a BenchConfig; anything else is
// a Scenario. `base_dir` resolves relative model file paths. Throws
// ConfigError naming the line and key on any problem, including unknown
// keys and semantic failures such as a non-SPD R.
ParsedConfig parse_config(std::string_view text,
                          const std::string& base_dir = ".");
Scenario parse_scenario(std::string_view text,
                        const std::string& base_dir = ".");
BenchConfig parse_bench_config(std::string_view text,
                               const std::string& base_dir = ".");

// Self-contained text (model written inline) that parses back to an equal
// Scenario.
std::string format_scenario(const Scenario& scenario);

// "paper-regulation", "paper-tracking".
Scenario preset_scenario(std::string_view name);
bool is_scenario_preset(std::string_view name);
// "default-benchmark".
BenchConfig preset_bench(std::string_view name);
bool is_bench_preset(std::string_view name);

std::vector<std::string> preset_names();

}  // namespace snac
