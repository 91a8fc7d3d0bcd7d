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

#include "snac/app.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include "snac/bench.hpp"
#include "snac/config.hpp"
#include "snac/episode_io.hpp"
#include "snac/error.hpp"
#include "snac/model_file.hpp"
#include "snac/sim.hpp"
#include "snac/validation.hpp"

namespace snac {
namespace {

namespace fs = std::filesystem;

ParsedConfig load_config(const std::string& source) {
  if (source.empty()) throw ConfigError("--config is required");
  std::error_code ec;
  if (fs::is_regular_file(source, ec)) {
    const fs::path p(source);
    return parse_config(read_text_file(source), p.parent_path().empty()
                                                  ? std::string(".")
                                                  : p.parent_path().string());
  }
  if (is_scenario_preset(source)) return preset_scenario(source);
  if (is_bench_preset(source)) return preset_bench(source);
  throw IoError(source, "no such config file or preset");
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(dir, "cannot create output directory: " + ec.message());
}

void write_file(const fs::path& path,
                const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError(path.string(), "cannot open for writing");
  body(f);
  f.flush();
  if (!f) throw IoError(path.string(), "write failed");
}

void write_episode(const EpisodeLog& log, const std::string& dir,
                   std::ostream& out, bool quiet) {
  ensure_dir(dir);
  const fs::path csv = fs::path(dir) / (log.scenario.name + ".csv");
  const fs::path summary = fs::path(dir) / (log.scenario.name + "_summary.txt");
  write_file(csv, [&](std::ostream& o) { write_episode_csv(log, o); });
  const std::string text = format_summary(log);
  write_file(summary, [&](std::ostream& o) { o << text; });
  if (!quiet) {
    out << text;
    out << "log = " << csv.string() << "\n";
  }
}

int simulate(const RunCommand& cmd, std::ostream& out, std::ostream& err) {
  ParsedConfig cfg = load_config(cmd.config);
  auto* sc = std::get_if<Scenario>(&cfg);
  if (sc == nullptr) {
    err << "error: '" << cmd.config << "' is a benchmark config; use 'benchmark'\n";
    return exit_code::kConfig;
  }
  if (cmd.seed) sc->seed = *cmd.seed;
  out << "seed = " << sc->seed << "\n";
  try {
    const EpisodeLog log = run_episode(*sc);
    write_episode(log, cmd.out_dir, out, cmd.quiet);
  } catch (const DivergenceError& d) {
    err << "error: " << d.what() << "\n";
    write_episode(d.partial_log(), cmd.out_dir, out, cmd.quiet);
    return exit_code::kDivergence;
  }
  return exit_code::kOk;
}

int benchmark(const RunCommand& cmd, std::ostream& out, std::ostream& err) {
  ParsedConfig cfg = load_config(cmd.config);
  auto* bc = std::get_if<BenchConfig>(&cfg);
  if (bc == nullptr) {
    err << "error: '" << cmd.config << "' is a scenario config; use 'simulate'\n";
    return exit_code::kConfig;
  }
  if (cmd.seed) bc->seed = *cmd.seed;
  out << "seed = " << bc->seed << "\n";
  const BenchReport report = run_benchmark(*bc);
  const std::string table = format_report_table(report);

  ensure_dir(cmd.out_dir);
  write_file(fs::path(cmd.out_dir) / "report.txt",
             [&](std::ostream& o) { o << table; });
  for (const BatchReport& b : report.batches) {
    write_file(fs::path(cmd.out_dir) / (std::string("report_") + to_string(b.task) + ".csv"),
               [&](std::ostream& o) { write_report_csv(b, o); });
  }
  if (!cmd.quiet) out << table;
  return exit_code::kOk;
}

int validate(const RunCommand& cmd, std::ostream& out) {
  const std::uint64_t seed = cmd.seed.value_or(1);
  out << "seed = " << seed << "\n";
  bool ok = true;
  for (const CheckResult& c : run_validation(seed)) {
    ok = ok && c.passed;
    if (!cmd.quiet || !c.passed) {
      out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    }
  }
  return ok ? exit_code::kOk : exit_code::kDivergence;
}

}  // namespace

int run_command(const RunCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.subcommand) {
      case Subcommand::kSimulate:
        return simulate(cmd, out, err);
      case Subcommand::kBenchmark:
        return benchmark(cmd, out, err);
      case Subcommand::kValidate:
        return validate(cmd, out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return exit_code::kConfig;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return exit_code::kIo;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return exit_code::kDivergence;
  }
  return exit_code::kConfig;
}

}  // namespace snac
