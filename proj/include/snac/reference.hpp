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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "snac/kinematics.hpp"

namespace snac {

enum class ReferenceKind { kFixed, kCircle, kEllipse };

struct ReferenceSample {
  Eigen::Vector3d x_d;
  Eigen::Vector3d xdot_d;
};

// Fixed point, or the closed curve
//   x_d(t) = c + r1 cos(w t + p) u + r2 sin(w t + p) v
// in the plane spanned by the orthonormal pair (u, v).
struct ReferenceTrajectory {
  ReferenceKind kind = ReferenceKind::kFixed;
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  double radius_u = 0.0;
  double radius_v = 0.0;
  Eigen::Vector3d axis_u = Eigen::Vector3d::UnitY();
  Eigen::Vector3d axis_v = Eigen::Vector3d::UnitZ();
  double angular_speed = 0.0;
  double phase = 0.0;

  static ReferenceTrajectory fixed(const Eigen::Vector3d& target);
  static ReferenceTrajectory circle(const Eigen::Vector3d& center,
                                    double radius, double angular_speed,
                                    const Eigen::Vector3d& axis_u,
                                    const Eigen::Vector3d& axis_v,
                                    double phase = 0.0);
  static ReferenceTrajectory ellipse(const Eigen::Vector3d& center,
                                     double radius_u, double radius_v,
                                     double angular_speed,
                                     const Eigen::Vector3d& axis_u,
                                     const Eigen::Vector3d& axis_v,
                                     double phase = 0.0);

  // Throws ConfigError on non-orthonormal axes or non-positive radii.
  void validate() const;
  double period() const;

  bool operator==(const ReferenceTrajectory&) const = default;
};

ReferenceSample sample_reference(const ReferenceTrajectory& traj, double t);

struct WorkspaceBox {
  Eigen::Vector3d lo;
  Eigen::Vector3d hi;

  // Default sampling cuboid, well inside UR10 reach.
  static WorkspaceBox ur10_default();

  bool contains(const Eigen::Vector3d& p, double margin = 0.0) const;
  void validate() const;

  bool operator==(const WorkspaceBox&) const = default;
};

struct EllipseSampling {
  double radius_min = 0.05;
  double radius_max = 0.15;
  double speed_min = 0.05;
  double speed_max = 0.15;
  int max_attempts = 1000;

  bool operator==(const EllipseSampling&) const = default;
};

// Ellipse whose bounding circle (radius max(r1, r2)) lies in the box, in a
// uniformly random plane. Throws ConfigError if the box cannot hold the
// minimum radius or rejection sampling gives up.
ReferenceTrajectory random_ellipse(std::uint64_t seed, const WorkspaceBox& box,
                                   const EllipseSampling& sampling = {});

struct JointSampling {
  std::vector<double> lo;  // empty: [-pi, pi] for every joint
  std::vector<double> hi;
  int max_attempts = 100000;

  bool operator==(const JointSampling&) const = default;
};

struct RegulationCase {
  JointVector seed_config;
  TaskPosition target;
};

// Target uniform in the box; seed configuration uniform over the joint
// ranges, redrawn until its end effector lies in the box.
RegulationCase random_regulation_case(std::uint64_t seed,
                                      const KinematicModel& model,
                                      const WorkspaceBox& box,
                                      const JointSampling& joints = {});

struct TrackingCase {
  JointVector seed_config;
  ReferenceTrajectory reference;
};

TrackingCase random_tracking_case(std::uint64_t seed,
                                  const KinematicModel& model,
                                  const WorkspaceBox& box,
                                  const JointSampling& joints = {},
                                  const EllipseSampling& ellipse = {});

// Splits one seed into independent per-case streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                          std::uint64_t index);

}  // namespace snac
