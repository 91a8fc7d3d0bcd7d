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

#include <iosfwd>
#include <string>

#include "snac/sim.hpp"

namespace snac {

// Header then one row per record:
// t, theta1..m, x1..x3, xd1..xd3, e1..e3, u1..um, u_clamped, Vhat, cost,
// w1..wl. u columns hold the applied (post-clamp) command.
std::string episode_csv_header(int dof, int weight_count);
void write_episode_csv(const EpisodeLog& log, std::ostream& out);

// "key = value" lines: summary totals plus the resolved reference.
std::string format_summary(const EpisodeLog& log);

}  // namespace snac
