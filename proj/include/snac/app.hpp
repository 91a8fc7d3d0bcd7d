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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace snac {

enum class Subcommand { kSimulate, kBenchmark, kValidate };

struct RunCommand {
  Subcommand subcommand = Subcommand::kSimulate;
  // File path, or a preset name when no such file exists.
  std::string config;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  bool quiet = false;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kConfig = 1;
inline constexpr int kDivergence = 2;
inline constexpr int kIo = 3;
}  // namespace exit_code

// Executes one subcommand. Diagnostics go to `err`, results to `out`.
int run_command(const RunCommand& cmd, std::ostream& out, std::ostream& err);

}  // namespace snac
