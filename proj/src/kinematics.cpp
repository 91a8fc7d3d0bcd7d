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

#include "snac/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "snac/error.hpp"

namespace snac {
namespace {

void check_config(const KinematicModel& model, const JointVector& q) {
  if (q.size() != model.dof()) {
    throw ConfigError("joint vector has " + std::to_string(q.size()) +
                      " entries, model '" + model.name() + "' has " +
                      std::to_string(model.dof()) + " joints");
  }
}

}  // namespace

KinematicModel::KinematicModel(std::string name, std::vector<DHRow> rows,
                               std::vector<double> joint_velocity_limits)
    : name_(std::move(name)),
      rows_(std::move(rows)),
      limits_(std::move(joint_velocity_limits)) {
  if (rows_.empty()) {
    throw ConfigError("kinematic model needs at least one DH row");
  }
  if (limits_.size() != rows_.size()) {
    throw ConfigError("expected " + std::to_string(rows_.size()) +
                      " joint velocity limits, got " +
                      std::to_string(limits_.size()));
  }
  for (const DHRow& r : rows_) {
    if (!std::isfinite(r.a) || !std::isfinite(r.alpha) ||
        !std::isfinite(r.d) || !std::isfinite(r.theta_offset)) {
      throw ConfigError("DH row contains a non-finite value");
    }
  }
  for (double l : limits_) {
    if (!(l > 0.0) || !std::isfinite(l)) {
      throw ConfigError("joint velocity limits must be positive and finite");
    }
  }
}

KinematicModel KinematicModel::ur10() {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  std::vector<DHRow> rows = {
      {0.0, kHalfPi, 0.1273, 0.0},    {-0.612, 0.0, 0.0, 0.0},
      {-0.5723, 0.0, 0.0, 0.0},       {0.0, kHalfPi, 0.163941, 0.0},
      {0.0, -kHalfPi, 0.1157, 0.0},   {0.0, 0.0, 0.0922, 0.0},
  };
  return KinematicModel("ur10", std::move(rows),
                        {2.094, 2.094, 3.142, 3.142, 3.142, 3.142});
}

Eigen::Matrix4d dh_transform(const DHRow& row, double q) {
  const double theta = q + row.theta_offset;
  const double ct = std::cos(theta), st = std::sin(theta);
  const double ca = std::cos(row.alpha), sa = std::sin(row.alpha);
  Eigen::Matrix4d a;
  a << ct, -st * ca, st * sa, row.a * ct,
       st, ct * ca, -ct * sa, row.a * st,
       0.0, sa, ca, row.d,
       0.0, 0.0, 0.0, 1.0;
  return a;
}

TaskPosition forward_kinematics(const KinematicModel& model,
                                const JointVector& q) {
  check_config(model, q);
  Eigen::Matrix4d t = Eigen::Matrix4d::Identity();
  for (int i = 0; i < model.dof(); ++i) {
    t = t * dh_transform(model.rows()[i], q[i]);
  }
  return t.block<3, 1>(0, 3);
}

PositionJacobian geometric_jacobian(const KinematicModel& model,
                                    const JointVector& q) {
  check_config(model, q);
  const int m = model.dof();
  // Joint i turns about z of frame i-1, located at the origin of frame i-1.
  std::vector<Eigen::Vector3d> axes(m), origins(m);
  Eigen::Matrix4d t = Eigen::Matrix4d::Identity();
  for (int i = 0; i < m; ++i) {
    axes[i] = t.block<3, 1>(0, 2);
    origins[i] = t.block<3, 1>(0, 3);
    t = t * dh_transform(model.rows()[i], q[i]);
  }
  const Eigen::Vector3d p_e = t.block<3, 1>(0, 3);

  PositionJacobian jac(3, m);
  for (int i = 0; i < m; ++i) {
    jac.col(i) = axes[i].cross(p_e - origins[i]);
  }
  return jac;
}

PositionJacobian numerical_jacobian(const KinematicModel& model,
                                    const JointVector& q, double h) {
  check_config(model, q);
  if (!(h > 0.0)) throw ConfigError("finite-difference step must be positive");
  PositionJacobian jac(3, model.dof());
  JointVector probe = q;
  for (int i = 0; i < model.dof(); ++i) {
    probe[i] = q[i] + h;
    const TaskPosition plus = forward_kinematics(model, probe);
    probe[i] = q[i] - h;
    const TaskPosition minus = forward_kinematics(model, probe);
    probe[i] = q[i];
    jac.col(i) = (plus - minus) / (2.0 * h);
  }
  return jac;
}

}  // namespace snac
