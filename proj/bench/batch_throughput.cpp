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

// Times the serial reference batch runner against the OpenMP one on the
// same seeded cases and checks that both produce identical outcomes.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <fmt/format.h>
#include <omp.h>

#include "snac/bench.hpp"

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 32;
  snac::BenchConfig cfg = snac::BenchConfig::defaults();
  cfg.cases = n;

  for (snac::TaskKind task : {snac::TaskKind::kRegulation, snac::TaskKind::kTracking}) {
    const auto cases = snac::make_cases(cfg, task);
    const auto& metric = cases.front().gains;

    auto time = [&](snac::ExecutionPolicy p, std::vector<snac::EpisodeOutcome>& out) {
      const auto t0 = std::chrono::steady_clock::now();
      out = snac::run_batch(cases, metric, p);
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    std::vector<snac::EpisodeOutcome> serial, parallel;
    const double ts = time(snac::ExecutionPolicy::kSerial, serial);
    const double tp = time(snac::ExecutionPolicy::kParallel, parallel);

    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i) {
      same = serial[i].diverged == parallel[i].diverged &&
             (serial[i].diverged || serial[i].cost == parallel[i].cost);
    }
    std::cout << fmt::format("{:<10} cases {:>4}  serial {:>8.3f} s  parallel {:>8.3f} s "
                             "({} threads, speedup {:.2f})  identical: {}\n",
                             snac::to_string(task), n, ts, tp, omp_get_max_threads(),
                             ts / tp, same ? "yes" : "NO");
    if (!same) return 1;
  }
  return 0;
}
