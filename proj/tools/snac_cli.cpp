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

#include <iostream>

#include "CLI11.hpp"
#include "snac/app.hpp"
#include "snac/config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Adaptive-critic kinematic control simulator"};
  app.require_subcommand(1);

  snac::RunCommand cmd;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* c = sub->add_option("--config", cmd.config,
                              "config file or preset name (paper-regulation, "
                              "paper-tracking, default-benchmark)");
    if (needs_config) c->required();
    sub->add_option("--out", cmd.out_dir, "output directory")
        ->capture_default_str();
    sub->add_option("--seed", seed, "override the config seed");
    sub->add_flag("--quiet", cmd.quiet, "print only the effective seed and errors");
  };

  auto* simulate = app.add_subcommand("simulate", "run one episode, write CSV log and summary");
  add_common(simulate, true);
  auto* benchmark = app.add_subcommand("benchmark", "run the randomized controller comparison");
  add_common(benchmark, true);
  auto* validate = app.add_subcommand("validate", "run the numerical self-checks");
  add_common(validate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return snac::exit_code::kConfig;
  }

  for (auto* sub : app.get_subcommands()) {
    if (sub->count("--seed") > 0) cmd.seed = seed;
  }
  if (simulate->parsed()) {
    cmd.subcommand = snac::Subcommand::kSimulate;
  } else if (benchmark->parsed()) {
    cmd.subcommand = snac::Subcommand::kBenchmark;
  } else {
    cmd.subcommand = snac::Subcommand::kValidate;
  }
  return snac::run_command(cmd, std::cout, std::cerr);
}
