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

#include "snac/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <limits>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "snac/error.hpp"
#include "snac/keyvalue.hpp"

namespace snac {
namespace {

Eigen::Vector3d damped_solve(const PositionJacobian& jacobian, double lambda,
                             const Eigen::Vector3d& rhs) {
  if (!(lambda >= 0.0)) throw ConfigError("DLS damping must be >= 0");
  const Eigen::Matrix3d a = jacobian * jacobian.transpose() +
                            lambda * lambda * Eigen::Matrix3d::Identity();
  Eigen::FullPivLU<Eigen::Matrix3d> lu(a);
  if (!lu.isInvertible()) {
    throw NumericalError("DLS system J J^T + lambda^2 I is singular");
  }
  Eigen::Vector3d y = lu.solve(rhs);
  if (!y.allFinite()) throw NumericalError("DLS solve produced non-finite values");
  return y;
}

std::vector<std::size_t> case_order(const std::vector<ControllerKind>& list,
                                    ControllerKind kind) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == kind) hits.push_back(i);
  }
  return hits;
}

std::uint64_t task_stream(TaskKind task) {
  return task == TaskKind::kRegulation ? 11 : 23;
}

}  // namespace

double trajectory_cost(const std::vector<EpisodeRecord>& records,
                       const GainConfig& gains) {
  double total = 0.0;
  double prev_f = 0.0;
  std::size_t samples = 0;
  const EpisodeRecord* prev = nullptr;
  for (const EpisodeRecord& r : records) {
    if (prev != nullptr && r.t == prev->t) continue;
    if (r.u.size() != gains.dof()) {
      throw ConfigError("logged control does not match R");
    }
    Eigen::VectorXd u_dot = Eigen::VectorXd::Zero(r.u.size());
    if (prev != nullptr) u_dot = (r.u - prev->u) / (r.t - prev->t);
    const double f = r.e.dot(gains.q() * r.e) + r.u.dot(gains.r() * r.u) +
                     u_dot.dot(gains.r() * u_dot);
    if (prev != nullptr) total += 0.5 * (r.t - prev->t) * (f + prev_f);
    prev_f = f;
    prev = &r;
    ++samples;
  }
  if (samples < 2) {
    throw ConfigError("trajectory cost needs at least two sample instants");
  }
  return total / static_cast<double>(samples);
}

Eigen::VectorXd baseline_dls_control(const Eigen::Vector3d& error,
                                     const PositionJacobian& jacobian,
                                     double lambda, double gain) {
  if (!(gain > 0.0)) throw ConfigError("DLS gain must be positive");
  return jacobian.transpose() * damped_solve(jacobian, lambda, -gain * error);
}

Eigen::VectorXd baseline_dls_tracking_control(const Eigen::Vector3d& error,
                                              const Eigen::Vector3d& xdot_d,
                                              const PositionJacobian& jacobian,
                                              double lambda, double gain) {
  if (!(gain > 0.0)) throw ConfigError("DLS gain must be positive");
  return jacobian.transpose() *
         damped_solve(jacobian, lambda, xdot_d - gain * error);
}

EffortMatch match_effort(double target_peak,
                         const std::function<double(double)>& peak_at_scale,
                         double rel_tolerance, int max_evaluations) {
  if (!(target_peak > 0.0) || !std::isfinite(target_peak)) {
    throw NumericalError("cannot match a zero or non-finite control effort");
  }
  EffortMatch m;
  m.target_peak = target_peak;
  auto eval = [&](double s) {
    if (m.evaluations >= max_evaluations) {
      throw NumericalError("effort matching did not converge in " +
                           std::to_string(max_evaluations) + " evaluations");
    }
    ++m.evaluations;
    return peak_at_scale(s);
  };
  auto close = [&](double p) {
    return std::abs(p / target_peak - 1.0) <= rel_tolerance;
  };

  double s = 1.0;
  double p = eval(s);
  if (close(p)) return {s, target_peak, p, m.evaluations};

  // Bracket [lo, hi] with peak(lo) < target < peak(hi).
  double lo = s, hi = s;
  if (p < target_peak) {
    while (p < target_peak) {
      lo = s;
      s *= 2.0;
      if (s > 1e12) throw NumericalError("baseline effort cannot reach target");
      p = eval(s);
      if (close(p)) return {s, target_peak, p, m.evaluations};
    }
    hi = s;
  } else {
    while (p > target_peak) {
      hi = s;
      s *= 0.5;
      if (s < 1e-12) throw NumericalError("baseline effort cannot shrink to target");
      p = eval(s);
      if (close(p)) return {s, target_peak, p, m.evaluations};
    }
    lo = s;
  }
  while (true) {
    s = std::sqrt(lo * hi);
    p = eval(s);
    if (close(p)) return {s, target_peak, p, m.evaluations};
    if (p < target_peak) {
      lo = s;
    } else {
      hi = s;
    }
  }
}

std::vector<EpisodeOutcome> run_batch(const std::vector<Scenario>& scenarios,
                                      const GainConfig& metric,
                                      ExecutionPolicy policy) {
  const long long n = static_cast<long long>(scenarios.size());
  std::vector<EpisodeOutcome> out(scenarios.size());
  std::vector<std::exception_ptr> errors(scenarios.size());

  auto run_one = [&](long long i) {
    EpisodeOutcome& o = out[static_cast<std::size_t>(i)];
    try {
      const EpisodeLog log = run_episode(scenarios[static_cast<std::size_t>(i)]);
      o.cost = trajectory_cost(log, metric);
      o.peak_effort = log.summary.peak_effort;
      o.final_error_norm = log.summary.final_error_norm;
    } catch (const DivergenceError& d) {
      o.diverged = true;
      o.cost = std::numeric_limits<double>::quiet_NaN();
      o.peak_effort = d.partial_log().summary.peak_effort;
      o.final_error_norm = std::numeric_limits<double>::quiet_NaN();
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };

  if (policy == ExecutionPolicy::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) run_one(i);
  } else {
    for (long long i = 0; i < n; ++i) run_one(i);
  }

  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

BenchConfig BenchConfig::defaults() {
  BenchConfig cfg;
  const KinematicModel ur10 = KinematicModel::ur10();

  Scenario reg;
  reg.name = "bench-regulation";
  reg.model = ur10;
  reg.task = TaskKind::kRegulation;
  reg.theta0 = JointVector::Zero(ur10.dof());
  reg.gains = GainConfig::identity(ur10.dof());
  reg.schedule = {100.0, 150.0, 50.0, 0.008};
  reg.horizon = 10.0;
  cfg.regulation_template = reg;

  Scenario trk = reg;
  trk.name = "bench-tracking";
  trk.task = TaskKind::kTracking;
  trk.schedule = {20.0, 70.0, 10.0, 0.008};
  trk.horizon = 30.0;
  trk.reference = ReferenceTrajectory::circle(
      Eigen::Vector3d(-0.7, 0.0, 0.5), 0.1, 0.1, Eigen::Vector3d::UnitY(),
      Eigen::Vector3d::UnitZ());
  cfg.tracking_template = trk;
  return cfg;
}

void BenchConfig::validate() const {
  if (cases < 1) throw ConfigError("benchmark needs at least one case");
  if (controllers.empty()) throw ConfigError("benchmark needs a controller");
  for (std::size_t i = 0; i < controllers.size(); ++i) {
    if (case_order(controllers, controllers[i]).size() != 1) {
      throw ConfigError("controller listed twice");
    }
  }
  if (!run_regulation && !run_tracking) {
    throw ConfigError("benchmark has no batch enabled");
  }
  box.validate();
  if (!(dls.damping >= 0.0) || !(dls.gain > 0.0)) {
    throw ConfigError("DLS needs damping >= 0 and gain > 0");
  }
  if (run_regulation && regulation_template.task != TaskKind::kRegulation) {
    throw ConfigError("regulation template must be a regulation task");
  }
  if (run_tracking && tracking_template.task != TaskKind::kTracking) {
    throw ConfigError("tracking template must be a tracking task");
  }
}

double PairwiseRecord::win_rate() const {
  const double n = static_cast<double>(wins + losses + ties);
  return n > 0 ? static_cast<double>(wins) / n : 0.0;
}
double PairwiseRecord::loss_rate() const {
  const double n = static_cast<double>(wins + losses + ties);
  return n > 0 ? static_cast<double>(losses) / n : 0.0;
}
double PairwiseRecord::tie_rate() const {
  const double n = static_cast<double>(wins + losses + ties);
  return n > 0 ? static_cast<double>(ties) / n : 0.0;
}

const ControllerSummary* BatchReport::find(ControllerKind kind) const {
  for (const ControllerSummary& c : controllers) {
    if (c.controller == kind) return &c;
  }
  return nullptr;
}

const BatchReport* BenchReport::find(TaskKind task) const {
  for (const BatchReport& b : batches) {
    if (b.task == task) return &b;
  }
  return nullptr;
}

std::vector<Scenario> make_cases(const BenchConfig& cfg, TaskKind task) {
  const Scenario& tmpl = task == TaskKind::kRegulation
                             ? cfg.regulation_template
                             : cfg.tracking_template;
  std::vector<Scenario> out;
  out.reserve(cfg.cases);
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    const std::uint64_t case_seed = derive_seed(cfg.seed, task_stream(task), i);
    Scenario sc = tmpl;
    sc.name = std::string(to_string(task)) + "-" + std::to_string(i);
    sc.seed = derive_seed(case_seed, 99, 0);
    if (task == TaskKind::kRegulation) {
      RegulationCase c =
          random_regulation_case(case_seed, tmpl.model, cfg.box, cfg.joints);
      sc.theta0 = std::move(c.seed_config);
      sc.reference = ReferenceTrajectory::fixed(c.target);
    } else {
      TrackingCase c = random_tracking_case(case_seed, tmpl.model, cfg.box,
                                            cfg.joints, cfg.ellipse);
      sc.theta0 = std::move(c.seed_config);
      sc.reference = c.reference;
    }
    out.push_back(std::move(sc));
  }
  return out;
}

namespace {

std::vector<Scenario> with_controller(std::vector<Scenario> cases,
                                      ControllerKind kind,
                                      const DlsSettings& dls) {
  for (Scenario& sc : cases) {
    sc.controller = kind;
    sc.dls = dls;
  }
  return cases;
}

double batch_peak(const std::vector<EpisodeOutcome>& outcomes) {
  double peak = 0.0;
  for (const EpisodeOutcome& o : outcomes) {
    if (!o.diverged) peak = std::max(peak, o.peak_effort);
  }
  return peak;
}

BatchReport run_batch_report(const BenchConfig& cfg, TaskKind task) {
  const std::vector<Scenario> cases = make_cases(cfg, task);
  const GainConfig& metric = task == TaskKind::kRegulation
                                 ? cfg.regulation_template.gains
                                 : cfg.tracking_template.gains;
  const std::size_t pilot_n =
      cfg.pilot_cases == 0 ? cases.size() : std::min(cfg.pilot_cases, cases.size());
  const std::vector<Scenario> pilot(cases.begin(), cases.begin() + pilot_n);

  BatchReport report;
  report.task = task;
  report.cases = cases.size();

  const bool has_critic = !case_order(cfg.controllers, ControllerKind::kCritic).empty();
  const bool has_dls = !case_order(cfg.controllers, ControllerKind::kDls).empty();

  DlsSettings dls = cfg.dls;
  double scale = 1.0;
  std::vector<std::vector<EpisodeOutcome>> outcomes(cfg.controllers.size());

  // The critic runs first so the baseline can be matched to its peak effort.
  if (has_critic) {
    const std::size_t idx = case_order(cfg.controllers, ControllerKind::kCritic)[0];
    outcomes[idx] = run_batch(with_controller(cases, ControllerKind::kCritic, dls),
                              metric, cfg.execution);
    if (has_dls && cfg.match_effort) {
      const std::vector<EpisodeOutcome> critic_pilot(
          outcomes[idx].begin(), outcomes[idx].begin() + pilot_n);
      const double target = batch_peak(critic_pilot);
      const EffortMatch match = match_effort(target, [&](double s) {
        DlsSettings trial = cfg.dls;
        trial.gain = cfg.dls.gain * s;
        return batch_peak(run_batch(
            with_controller(pilot, ControllerKind::kDls, trial), metric,
            cfg.execution));
      });
      scale = match.scale;
      dls.gain = cfg.dls.gain * scale;
    }
  }
  for (std::size_t c = 0; c < cfg.controllers.size(); ++c) {
    if (cfg.controllers[c] == ControllerKind::kCritic) continue;
    outcomes[c] = run_batch(with_controller(cases, cfg.controllers[c], dls),
                            metric, cfg.execution);
  }

  for (std::size_t c = 0; c < cfg.controllers.size(); ++c) {
    ControllerSummary s;
    s.controller = cfg.controllers[c];
    double sum = 0.0;
    std::size_t ok = 0;
    for (const EpisodeOutcome& o : outcomes[c]) {
      if (o.diverged) {
        ++s.diverged;
        continue;
      }
      sum += o.cost;
      ++ok;
    }
    s.mean_cost = ok > 0 ? sum / static_cast<double>(ok)
                         : std::numeric_limits<double>::quiet_NaN();
    s.peak_effort = batch_peak(outcomes[c]);
    if (s.controller == ControllerKind::kDls) {
      s.effort_scale = scale;
      s.gain = dls.gain;
    }
    report.controllers.push_back(s);
  }

  for (std::size_t i = 0; i < cases.size(); ++i) {
    for (std::size_t c = 0; c < cfg.controllers.size(); ++c) {
      const EpisodeOutcome& o = outcomes[c][i];
      report.results.push_back({i, cfg.controllers[c], o.cost, o.peak_effort,
                                o.diverged});
    }
  }

  for (std::size_t a = 0; a < cfg.controllers.size(); ++a) {
    for (std::size_t b = a + 1; b < cfg.controllers.size(); ++b) {
      PairwiseRecord p;
      p.a = cfg.controllers[a];
      p.b = cfg.controllers[b];
      for (std::size_t i = 0; i < cases.size(); ++i) {
        const EpisodeOutcome& oa = outcomes[a][i];
        const EpisodeOutcome& ob = outcomes[b][i];
        if (oa.diverged && ob.diverged) {
          ++p.ties;
        } else if (ob.diverged || (!oa.diverged && oa.cost < ob.cost)) {
          ++p.wins;
        } else if (oa.diverged || ob.cost < oa.cost) {
          ++p.losses;
        } else {
          ++p.ties;
        }
      }
      report.pairs.push_back(p);
    }
  }
  return report;
}

}  // namespace

BenchReport run_benchmark(const BenchConfig& cfg) {
  cfg.validate();
  BenchReport report;
  report.seed = cfg.seed;
  if (cfg.run_regulation) {
    report.batches.push_back(run_batch_report(cfg, TaskKind::kRegulation));
  }
  if (cfg.run_tracking) {
    report.batches.push_back(run_batch_report(cfg, TaskKind::kTracking));
  }
  return report;
}

std::string format_report_table(const BenchReport& report) {
  std::string out;
  std::vector<ControllerKind> order;
  for (const BatchReport& b : report.batches) {
    for (const ControllerSummary& c : b.controllers) {
      if (std::find(order.begin(), order.end(), c.controller) == order.end()) {
        order.push_back(c.controller);
      }
    }
  }

  const std::string rule(18 + 20 * report.batches.size(), '-');
  out += rule + "\n";
  out += fmt::format("{:<18}", "Controller");
  for (std::size_t i = 0; i < report.batches.size(); ++i) {
    out += fmt::format("{:>20}", "Trajectory cost");
  }
  out += "\n" + fmt::format("{:<18}", "");
  for (const BatchReport& b : report.batches) {
    std::string label = to_string(b.task);
    label[0] = static_cast<char>(std::toupper(label[0]));
    out += fmt::format("{:>20}", label);
  }
  out += "\n" + rule + "\n";
  for (ControllerKind kind : order) {
    out += fmt::format("{:<18}", to_string(kind));
    for (const BatchReport& b : report.batches) {
      const ControllerSummary* s = b.find(kind);
      out += s ? fmt::format("{:>20.6g}", s->mean_cost) : fmt::format("{:>20}", "-");
    }
    out += "\n";
  }
  out += rule + "\n";

  for (const BatchReport& b : report.batches) {
    out += fmt::format("{} batch: {} cases\n", to_string(b.task), b.cases);
    for (const ControllerSummary& s : b.controllers) {
      out += fmt::format("  {:<8} diverged {:>4}  peak |u| {:.4g} rad/s", to_string(s.controller),
                         s.diverged, s.peak_effort);
      if (s.controller == ControllerKind::kDls) {
        out += fmt::format("  gain {:.4g} (effort scale {:.4g})", s.gain, s.effort_scale);
      }
      out += "\n";
    }
    for (const PairwiseRecord& p : b.pairs) {
      out += fmt::format("  {} vs {}: win {:.3f}  loss {:.3f}  tie {:.3f}\n",
                         to_string(p.a), to_string(p.b), p.win_rate(),
                         p.loss_rate(), p.tie_rate());
    }
  }
  return out;
}

void write_report_csv(const BatchReport& batch, std::ostream& out) {
  out << "case,controller,cost,diverged\n";
  for (const CaseResult& r : batch.results) {
    out << r.index << ',' << to_string(r.controller) << ','
        << (r.diverged ? std::string("nan") : format_double(r.cost)) << ','
        << (r.diverged ? 1 : 0) << '\n';
  }
}

}  // namespace snac
