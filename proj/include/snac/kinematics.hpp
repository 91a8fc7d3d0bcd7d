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

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace snac {

using JointVector = Eigen::VectorXd;
using TaskPosition = Eigen::Vector3d;
using PositionJacobian = Eigen::Matrix<double, 3, Eigen::Dynamic>;

// One row of a standard Denavit-Hartenberg table. Lengths in meters,
// angles in radians.
struct DHRow {
  double a = 0.0;
  double alpha = 0.0;
  double d = 0.0;
  double theta_offset = 0.0;

  bool operator==(const DHRow&) const = default;
};

// Serial chain of revolute joints described by DH rows, plus per-joint
// velocity bounds (rad/s).
class KinematicModel {
 public:
  KinematicModel() = default;

  // Throws ConfigError unless rows is non-empty, every value is finite and
  // one positive limit is given per joint.
  KinematicModel(std::string name, std::vector<DHRow> rows,
                 std::vector<double> joint_velocity_limits);

  // UR10 standard DH table with datasheet joint speed limits.
  static KinematicModel ur10();

  const std::string& name() const { return name_; }
  const std::vector<DHRow>& rows() const { return rows_; }
  const std::vector<double>& joint_velocity_limits() const { return limits_; }
  int dof() const { return static_cast<int>(rows_.size()); }

  bool operator==(const KinematicModel&) const = default;

 private:
  std::string name_;
  std::vector<DHRow> rows_;
  std::vector<double> limits_;
};

// Homogeneous transform of a single DH row at joint angle q (offset applied).
Eigen::Matrix4d dh_transform(const DHRow& row, double q);

// End-effector position: translation of the product of all row transforms.
TaskPosition forward_kinematics(const KinematicModel& model,
                                const JointVector& q);

// Linear-velocity rows of the geometric Jacobian. Column i is
// z_{i-1} x (p_e - p_{i-1}).
PositionJacobian geometric_jacobian(const KinematicModel& model,
                                    const JointVector& q);

// Central-difference approximation of the position Jacobian with step h.
PositionJacobian numerical_jacobian(const KinematicModel& model,
                                    const JointVector& q, double h = 1e-6);

}  // namespace snac
