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
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "snac/control.hpp"
#include "snac/reference.hpp"
#include "snac/sim.hpp"

namespace snac {

// Normalized trajectory cost V / N with
//   V = integral of e^T Q e + u^T R u + udot^T R udot dt
// (trapezoidal over the log's time stamps). udot at sample k is
// (u_k - u_{k-1}) / (t_k - t_{k-1}) and zero at the first sample. Records
// repeating the previous time stamp are not new sample instances and are
// skipped. Throws ConfigError on logs with fewer than 2 instants.
double trajectory_cost(const std::vector<EpisodeRecord>& records,
                       const GainConfig& gains);
inline double trajectory_cost(const EpisodeLog& log, const GainConfig& gains) {
  return trajectory_cost(log.records, gains);
}

// u = -gain J^T (J J^T + lambda^2 I)^-1 e
Eigen::VectorXd baseline_dls_control(const Eigen::Vector3d& error,
                                     const PositionJacobian& jacobian,
                                     double lambda, double gain);
// u = J^T (J J^T + lambda^2 I)^-1 (xdot_d - gain e)
Eigen::VectorXd baseline_dls_tracking_control(const Eigen::Vector3d& error,
                                              const Eigen::Vector3d& xdot_d,
                                              const PositionJacobian& jacobian,
                                              double lambda, double gain);

struct EffortMatch {
  double scale = 1.0;
  double target_peak = 0.0;
  double achieved_peak = 0.0;
  int evaluations = 0;
};

// Finds s with peak_at_scale(s) equal to target_peak within rel_tolerance,
// by bracketing in log-scale and bisecting. peak_at_scale must be
// non-decreasing in s. Throws NumericalError for a non-positive target or
// when no match is found within max_evaluations.
EffortMatch match_effort(double target_peak,
                         const std::function<double(double)>& peak_at_scale,
                         double rel_tolerance = 0.005,
                         int max_evaluations = 200);

enum class ExecutionPolicy { kSerial, kParallel };

struct EpisodeOutcome {
  double cost = 0.0;  // normalized trajectory cost
  double peak_effort = 0.0;
  double final_error_norm = 0.0;
  bool diverged = false;
};

// Runs every scenario and scores it with trajectory_cost under `metric`.
// Results are indexed like the input regardless of policy.
std::vector<EpisodeOutcome> run_batch(const std::vector<Scenario>& scenarios,
                                      const GainConfig& metric,
                                      ExecutionPolicy policy);

struct BenchConfig {
  std::size_t cases = 100;
  std::uint64_t seed = 2024;
  WorkspaceBox box = WorkspaceBox::ur10_default();
  JointSampling joints;
  EllipseSampling ellipse;
  bool run_regulation = true;
  bool run_tracking = true;
  std::vector<ControllerKind> controllers = {ControllerKind::kCritic,
                                             ControllerKind::kDls};
  // Templates supply the model, schedule, dt, horizon and clamp setting;
  // case sampling overrides theta0, the reference and the seed.
  Scenario regulation_template;
  Scenario tracking_template;
  DlsSettings dls;
  bool match_effort = true;
  std::size_t pilot_cases = 0;  // 0: use the whole batch
  ExecutionPolicy execution = ExecutionPolicy::kParallel;

  static BenchConfig defaults();
  void validate() const;
  bool operator==(const BenchConfig&) const = default;
};

struct CaseResult {
  std::size_t index = 0;
  ControllerKind controller = ControllerKind::kCritic;
  double cost = 0.0;
  double peak_effort = 0.0;
  bool diverged = false;
};

struct ControllerSummary {
  ControllerKind controller = ControllerKind::kCritic;
  double mean_cost = 0.0;  // over non-diverged cases
  std::size_t diverged = 0;
  double peak_effort = 0.0;
  double effort_scale = 1.0;  // applied to the DLS gain
  double gain = 0.0;          // DLS gain actually used
};

struct PairwiseRecord {
  ControllerKind a = ControllerKind::kCritic;
  ControllerKind b = ControllerKind::kDls;
  std::size_t wins = 0;  // a strictly cheaper (or b diverged alone)
  std::size_t losses = 0;
  std::size_t ties = 0;

  double win_rate() const;
  double loss_rate() const;
  double tie_rate() const;
};

struct BatchReport {
  TaskKind task = TaskKind::kRegulation;
  std::size_t cases = 0;
  std::vector<ControllerSummary> controllers;
  std::vector<CaseResult> results;  // sorted by (index, controller)
  std::vector<PairwiseRecord> pairs;

  const ControllerSummary* find(ControllerKind kind) const;
};

struct BenchReport {
  std::uint64_t seed = 0;
  std::vector<BatchReport> batches;

  const BatchReport* find(TaskKind task) const;
};

// Sampled episode descriptions for one batch, in case order.
std::vector<Scenario> make_cases(const BenchConfig& cfg, TaskKind task);

BenchReport run_benchmark(const BenchConfig& cfg);

// Aligned text table, one row per controller and a column per batch.
std::string format_report_table(const BenchReport& report);
// Columns: case,controller,cost,diverged
void write_report_csv(const BatchReport& batch, std::ostream& out);

}  // namespace snac
