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

#include "snac/sim.hpp"

#include <cmath>
#include <string>

#include "snac/bench.hpp"

namespace snac {
namespace {

constexpr double kDivergenceBound = 1e6;

bool within_envelope(const Eigen::VectorXd& v) {
  return v.allFinite() && v.norm() <= kDivergenceBound;
}

}  // namespace

const char* to_string(TaskKind kind) {
  return kind == TaskKind::kRegulation ? "regulation" : "tracking";
}

const char* to_string(ControllerKind kind) {
  switch (kind) {
    case ControllerKind::kCritic:
      return "critic";
    case ControllerKind::kDls:
      return "dls";
    case ControllerKind::kZero:
      return "zero";
  }
  return "?";
}

void Scenario::validate() const {
  const int m = model.dof();
  if (theta0.size() != m) {
    throw ConfigError("theta0 has " + std::to_string(theta0.size()) +
                      " entries, model has " + std::to_string(m) + " joints");
  }
  if (!theta0.allFinite()) throw ConfigError("theta0 is not finite");
  if (gains.dof() != m) {
    throw ConfigError("R must be " + std::to_string(m) + "x" +
                      std::to_string(m));
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ConfigError("dt must be positive");
  }
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) {
    throw ConfigError("horizon must be >= 0");
  }
  if (!(weight_init_range >= 0.0) || !std::isfinite(weight_init_range)) {
    throw ConfigError("weight_init_range must be >= 0");
  }
  reference.validate();
  if (task == TaskKind::kRegulation && reference.kind != ReferenceKind::kFixed) {
    throw ConfigError("regulation needs a fixed target");
  }
  if (controller == ControllerKind::kCritic) schedule.validate();
  if (controller == ControllerKind::kDls &&
      (!(dls.damping >= 0.0) || !(dls.gain > 0.0))) {
    throw ConfigError("DLS needs damping >= 0 and gain > 0");
  }
}

long long Scenario::step_count() const {
  return static_cast<long long>(std::floor(horizon / dt + 1e-9));
}

bool Scenario::operator==(const Scenario& o) const {
  return name == o.name && model == o.model && task == o.task &&
         reference == o.reference && theta0 == o.theta0 && gains == o.gains &&
         schedule == o.schedule && weight_init_range == o.weight_init_range &&
         dt == o.dt && horizon == o.horizon && seed == o.seed &&
         clamp == o.clamp && controller == o.controller && dls == o.dls;
}

double instantaneous_cost(const Eigen::Vector3d& error,
                          const Eigen::VectorXd& u, const GainConfig& gains) {
  if (u.size() != gains.dof()) {
    throw ConfigError("control vector does not match R");
  }
  return error.dot(gains.q() * error) + u.dot(gains.r() * u);
}

Controller make_controller(const Scenario& scenario) {
  switch (scenario.controller) {
    case ControllerKind::kCritic: {
      QuadraticBasis basis = scenario.task == TaskKind::kRegulation
                                 ? QuadraticBasis::regulation()
                                 : QuadraticBasis::tracking();
      CriticWeights w = CriticWeights::random(basis.size(), scenario.seed,
                                              scenario.weight_init_range);
      return CriticController{std::move(basis), std::move(w),
                              scenario.schedule};
    }
    case ControllerKind::kDls:
      return DlsController{scenario.dls};
    case ControllerKind::kZero:
      return ZeroController{};
  }
  throw ConfigError("unknown controller");
}

SimState initial_state(const Scenario& scenario) {
  return SimState{0, scenario.theta0, make_controller(scenario)};
}

EpisodeRecord step(const Scenario& sc, SimState& state, bool integrate) {
  EpisodeRecord rec;
  rec.t = static_cast<double>(state.step) * sc.dt;
  rec.theta = state.theta;

  // (1) kinematics at theta_k
  rec.x = forward_kinematics(sc.model, state.theta);
  const PositionJacobian jac = geometric_jacobian(sc.model, state.theta);
  // (2) error against the reference at t_k
  const ReferenceSample ref = sample_reference(sc.reference, rec.t);
  rec.x_d = ref.x_d;
  rec.e = rec.x - ref.x_d;

  const bool tracking = sc.task == TaskKind::kTracking;
  if (auto* critic = std::get_if<CriticController>(&state.controller)) {
    // (3) learning rate, (4) weight update, (5) control from new weights
    const double alpha = critic->schedule.at_time(rec.t);
    if (tracking) {
      const AugmentedState xi{rec.e, rec.x_d};
      critic->weights =
          tracking_weight_step(critic->weights, critic->basis, xi.stacked(),
                               jac, sc.gains.r_inverse(), alpha, sc.dt);
      rec.u_raw = tracking_control(critic->weights, critic->basis, xi, jac,
                                   sc.gains);
      rec.value = value_estimate(critic->weights, critic->basis, xi.stacked());
    } else {
      critic->weights =
          regulation_weight_step(critic->weights, critic->basis, rec.e, jac,
                                 sc.gains.r_inverse(), alpha, sc.dt);
      rec.u_raw = regulation_control(critic->weights, critic->basis, rec.e,
                                     jac, sc.gains);
      rec.value = value_estimate(critic->weights, critic->basis, rec.e);
    }
    rec.weights = critic->weights.w;
  } else if (auto* dls = std::get_if<DlsController>(&state.controller)) {
    rec.u_raw = tracking
                    ? baseline_dls_tracking_control(rec.e, ref.xdot_d, jac,
                                                    dls->settings.damping,
                                                    dls->settings.gain)
                    : baseline_dls_control(rec.e, jac, dls->settings.damping,
                                           dls->settings.gain);
    rec.weights.resize(0);
  } else {
    rec.u_raw = Eigen::VectorXd::Zero(sc.model.dof());
    rec.weights.resize(0);
  }

  // (6) optional clamp; the weight law never sees it
  if (sc.clamp) {
    ClampResult c = clamp_velocity(rec.u_raw, sc.model.joint_velocity_limits());
    rec.u = std::move(c.u);
    rec.clamped = c.clamped;
  } else {
    rec.u = rec.u_raw;
  }
  rec.cost = instantaneous_cost(rec.e, rec.u, sc.gains);

  // (7) theta_{k+1} = theta_k + dt * u_k
  if (integrate) {
    state.theta += sc.dt * rec.u;
    ++state.step;
  }
  return rec;
}

double trapezoid_total_cost(const std::vector<EpisodeRecord>& records) {
  double total = 0.0;
  for (std::size_t k = 1; k < records.size(); ++k) {
    total += 0.5 * (records[k].t - records[k - 1].t) *
             (records[k].cost + records[k - 1].cost);
  }
  return total;
}

EpisodeSummary summarize(const Scenario& scenario,
                         const std::vector<EpisodeRecord>& records) {
  (void)scenario;
  EpisodeSummary s;
  s.steps = static_cast<long long>(records.size());
  if (records.empty()) return s;
  s.final_error_norm = records.back().e.norm();
  s.total_cost = trapezoid_total_cost(records);
  for (const EpisodeRecord& r : records) {
    if (r.clamped) ++s.clamp_count;
    if (r.u.size() > 0) {
      s.peak_effort = std::max(s.peak_effort, r.u.cwiseAbs().maxCoeff());
    }
  }
  return s;
}

EpisodeLog run_episode(const Scenario& scenario) {
  scenario.validate();
  EpisodeLog log;
  log.scenario = scenario;
  const long long steps = scenario.step_count();
  log.records.reserve(static_cast<std::size_t>(steps + 1));

  SimState state = initial_state(scenario);
  for (long long k = 0; k <= steps; ++k) {
    std::string failure;
    try {
      log.records.push_back(step(scenario, state, k < steps));
      const EpisodeRecord& r = log.records.back();
      if (!within_envelope(state.theta) || !within_envelope(r.u_raw) ||
          !within_envelope(r.weights) || !within_envelope(r.e)) {
        failure = "state left the finite envelope at t = " +
                  std::to_string(r.t);
      }
    } catch (const NumericalError& err) {
      failure = err.what();
    }
    if (!failure.empty()) {
      log.summary = summarize(scenario, log.records);
      log.summary.diverged = true;
      throw DivergenceError("episode '" + scenario.name +
                                "' diverged: " + failure,
                            std::move(log));
    }
  }
  log.summary = summarize(scenario, log.records);
  return log;
}

}  // namespace snac
