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

#include "snac/keyvalue.hpp"
#include "snac/kinematics.hpp"

namespace snac {

// Model files:
//   name = ur10
//   dof = 6
//   row1 = <a> <alpha> <d> <theta_offset>
//   ...
//   velocity_limits = <l1> ... <lm>
KinematicModel parse_model_text(std::string_view text);
KinematicModel load_model_file(const std::string& path);
std::string format_model_text(const KinematicModel& model);

// Builds a model from the entries of one section of a larger document.
KinematicModel model_from_section(const KeyValueDocument& doc,
                                  std::string_view section);

std::string read_text_file(const std::string& path);

}  // namespace snac
