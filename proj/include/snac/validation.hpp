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
#include <string>
#include <vector>

namespace snac {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Self-check of the numerical core on seeded random samples: analytic vs
// finite-difference Jacobians, closed-form UR10 position, basis gradients,
// control-law stationarity, Hamiltonian minimality, reference derivatives.
std::vector<CheckResult> run_validation(std::uint64_t seed, int samples = 100);

}  // namespace snac
