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
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "snac/control.hpp"
#include "snac/critic.hpp"
#include "snac/error.hpp"
#include "snac/kinematics.hpp"
#include "snac/reference.hpp"

namespace snac {

enum class TaskKind { kRegulation, kTracking };

// kCritic: the adaptive-critic policy with online weight tuning.
// kDls: damped-least-squares resolved-rate baseline.
// kZero: commands zero velocity (diagnostics).
enum class ControllerKind { kCritic, kDls, kZero };

const char* to_string(TaskKind kind);
const char* to_string(ControllerKind kind);

struct DlsSettings {
  double damping = 0.1;
  double gain = 1.0;

  bool operator==(const DlsSettings&) const = default;
};

struct Scenario {
  std::string name = "scenario";
  KinematicModel model = KinematicModel::ur10();
  TaskKind task = TaskKind::kRegulation;
  ReferenceTrajectory reference;
  JointVector theta0;
  GainConfig gains = GainConfig::identity(6);
  LearningRateSchedule schedule;
  double weight_init_range = 0.5;
  double dt = 0.008;
  double horizon = 20.0;
  std::uint64_t seed = 1;
  bool clamp = false;
  ControllerKind controller = ControllerKind::kCritic;
  DlsSettings dls;

  void validate() const;
  // Number of integration steps; the log holds step_count() + 1 records.
  long long step_count() const;

  bool operator==(const Scenario&) const;
};

double instantaneous_cost(const Eigen::Vector3d& error,
                          const Eigen::VectorXd& u, const GainConfig& gains);

struct EpisodeRecord {
  double t = 0.0;
  JointVector theta;
  Eigen::Vector3d x;
  Eigen::Vector3d x_d;
  Eigen::Vector3d e;
  Eigen::VectorXd u_raw;  // before clamping
  Eigen::VectorXd u;      // applied
  bool clamped = false;
  double value = 0.0;
  double cost = 0.0;
  Eigen::VectorXd weights;
};

struct EpisodeSummary {
  double final_error_norm = 0.0;
  double total_cost = 0.0;
  long long steps = 0;
  long long clamp_count = 0;
  double peak_effort = 0.0;  // max |u_j| over the episode
  bool diverged = false;
};

struct EpisodeLog {
  Scenario scenario;
  std::vector<EpisodeRecord> records;
  EpisodeSummary summary;
};

struct CriticController {
  QuadraticBasis basis;
  CriticWeights weights;
  LearningRateSchedule schedule;
};

struct DlsController {
  DlsSettings settings;
};

struct ZeroController {};

using Controller = std::variant<CriticController, DlsController, ZeroController>;

Controller make_controller(const Scenario& scenario);

struct SimState {
  long long step = 0;
  JointVector theta;
  Controller controller;
};

SimState initial_state(const Scenario& scenario);

// One control period at t = step * dt: kinematics, error, learning rate,
// weight update, control law, optional clamp. Returns the record for this
// instant; when `integrate` is set, advances theta by dt * u.
EpisodeRecord step(const Scenario& scenario, SimState& state,
                   bool integrate = true);

// Thrown when the state leaves the finite envelope; carries the partial log.
class DivergenceError : public NumericalError {
 public:
  DivergenceError(const std::string& what, EpisodeLog partial)
      : NumericalError(what),
        partial_(std::make_shared<EpisodeLog>(std::move(partial))) {}

  const EpisodeLog& partial_log() const { return *partial_; }

 private:
  std::shared_ptr<EpisodeLog> partial_;
};

EpisodeLog run_episode(const Scenario& scenario);

// Computes summary fields from records.
EpisodeSummary summarize(const Scenario& scenario,
                         const std::vector<EpisodeRecord>& records);

// Trapezoidal integral of per-record cost over the log's time stamps.
double trapezoid_total_cost(const std::vector<EpisodeRecord>& records);

}  // namespace snac
