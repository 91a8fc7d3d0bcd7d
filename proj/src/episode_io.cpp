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

#include "snac/episode_io.hpp"

#include <ostream>

#include <fmt/format.h>

#include "snac/keyvalue.hpp"

namespace snac {
namespace {

const char* reference_name(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::kFixed:
      return "fixed";
    case ReferenceKind::kCircle:
      return "circle";
    case ReferenceKind::kEllipse:
      return "ellipse";
  }
  return "?";
}

void append(std::string& row, double v) {
  row += ',';
  row += format_double(v);
}

std::vector<double> to_vec(const Eigen::Vector3d& v) {
  return {v.x(), v.y(), v.z()};
}

int weight_columns(const EpisodeLog& log) {
  if (log.scenario.controller != ControllerKind::kCritic) return 0;
  return log.scenario.task == TaskKind::kRegulation
             ? QuadraticBasis::regulation().size()
             : QuadraticBasis::tracking().size();
}

}  // namespace

std::string episode_csv_header(int dof, int weight_count) {
  std::string h = "t";
  for (int j = 1; j <= dof; ++j) h += ",theta" + std::to_string(j);
  for (int i = 1; i <= 3; ++i) h += ",x" + std::to_string(i);
  for (int i = 1; i <= 3; ++i) h += ",xd" + std::to_string(i);
  for (int i = 1; i <= 3; ++i) h += ",e" + std::to_string(i);
  for (int j = 1; j <= dof; ++j) h += ",u" + std::to_string(j);
  h += ",u_clamped,Vhat,cost";
  for (int r = 1; r <= weight_count; ++r) h += ",w" + std::to_string(r);
  return h;
}

void write_episode_csv(const EpisodeLog& log, std::ostream& out) {
  const int dof = log.scenario.model.dof();
  const int wl = weight_columns(log);
  out << episode_csv_header(dof, wl) << '\n';
  std::string row;
  for (const EpisodeRecord& r : log.records) {
    row = format_double(r.t);
    for (Eigen::Index j = 0; j < r.theta.size(); ++j) append(row, r.theta[j]);
    for (int i = 0; i < 3; ++i) append(row, r.x[i]);
    for (int i = 0; i < 3; ++i) append(row, r.x_d[i]);
    for (int i = 0; i < 3; ++i) append(row, r.e[i]);
    for (Eigen::Index j = 0; j < r.u.size(); ++j) append(row, r.u[j]);
    row += r.clamped ? ",1" : ",0";
    append(row, r.value);
    append(row, r.cost);
    for (Eigen::Index i = 0; i < r.weights.size(); ++i) append(row, r.weights[i]);
    out << row << '\n';
  }
}

std::string format_summary(const EpisodeLog& log) {
  const Scenario& sc = log.scenario;
  const EpisodeSummary& s = log.summary;
  std::string out;
  auto kv = [&out](const std::string& k, const std::string& v) {
    out += k + " = " + v + "\n";
  };
  kv("scenario", sc.name);
  kv("task", to_string(sc.task));
  kv("controller", to_string(sc.controller));
  kv("seed", std::to_string(sc.seed));
  kv("dt", format_double(sc.dt));
  kv("horizon", format_double(sc.horizon));
  kv("reference_kind", reference_name(sc.reference.kind));
  kv("reference_center", format_doubles(to_vec(sc.reference.center)));
  if (sc.reference.kind != ReferenceKind::kFixed) {
    kv("reference_radii", format_doubles({sc.reference.radius_u,
                                          sc.reference.radius_v}));
    kv("reference_axis_u", format_doubles(to_vec(sc.reference.axis_u)));
    kv("reference_axis_v", format_doubles(to_vec(sc.reference.axis_v)));
    kv("reference_angular_speed", format_double(sc.reference.angular_speed));
    kv("reference_phase", format_double(sc.reference.phase));
  }
  kv("steps", std::to_string(s.steps));
  kv("final_error_norm", format_double(s.final_error_norm));
  kv("total_cost", format_double(s.total_cost));
  kv("clamp_count", std::to_string(s.clamp_count));
  kv("peak_effort", format_double(s.peak_effort));
  kv("diverged", s.diverged ? "true" : "false");
  return out;
}

}  // namespace snac
