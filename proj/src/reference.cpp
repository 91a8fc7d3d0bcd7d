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

#include "snac/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "snac/error.hpp"

namespace snac {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Eigen::Vector3d uniform_in(std::mt19937_64& rng, const Eigen::Vector3d& lo,
                           const Eigen::Vector3d& hi) {
  return {uniform(rng, lo.x(), hi.x()), uniform(rng, lo.y(), hi.y()),
          uniform(rng, lo.z(), hi.z())};
}

Eigen::Vector3d gaussian3(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double x = n(rng), y = n(rng), z = n(rng);
  return {x, y, z};
}

JointVector sample_joints(std::mt19937_64& rng, const KinematicModel& model,
                          const JointSampling& joints) {
  const int m = model.dof();
  const bool defaulted = joints.lo.empty() && joints.hi.empty();
  if (!defaulted && (static_cast<int>(joints.lo.size()) != m ||
                     static_cast<int>(joints.hi.size()) != m)) {
    throw ConfigError("joint sampling ranges need one bound per joint");
  }
  JointVector q(m);
  for (int j = 0; j < m; ++j) {
    const double lo = defaulted ? -std::numbers::pi : joints.lo[j];
    const double hi = defaulted ? std::numbers::pi : joints.hi[j];
    if (!(hi > lo)) throw ConfigError("joint sampling range is empty");
    q[j] = uniform(rng, lo, hi);
  }
  return q;
}

JointVector sample_seed_config(std::mt19937_64& rng,
                               const KinematicModel& model,
                               const WorkspaceBox& box,
                               const JointSampling& joints) {
  for (int attempt = 0; attempt < joints.max_attempts; ++attempt) {
    JointVector q = sample_joints(rng, model, joints);
    if (box.contains(forward_kinematics(model, q))) return q;
  }
  throw ConfigError("no seed configuration with its end effector inside the "
                    "workspace box after " +
                    std::to_string(joints.max_attempts) + " draws");
}

}  // namespace

ReferenceTrajectory ReferenceTrajectory::fixed(const Eigen::Vector3d& target) {
  ReferenceTrajectory t;
  t.kind = ReferenceKind::kFixed;
  t.center = target;
  return t;
}

ReferenceTrajectory ReferenceTrajectory::circle(const Eigen::Vector3d& center,
                                                double radius,
                                                double angular_speed,
                                                const Eigen::Vector3d& axis_u,
                                                const Eigen::Vector3d& axis_v,
                                                double phase) {
  ReferenceTrajectory t =
      ellipse(center, radius, radius, angular_speed, axis_u, axis_v, phase);
  t.kind = ReferenceKind::kCircle;
  return t;
}

ReferenceTrajectory ReferenceTrajectory::ellipse(
    const Eigen::Vector3d& center, double radius_u, double radius_v,
    double angular_speed, const Eigen::Vector3d& axis_u,
    const Eigen::Vector3d& axis_v, double phase) {
  ReferenceTrajectory t;
  t.kind = ReferenceKind::kEllipse;
  t.center = center;
  t.radius_u = radius_u;
  t.radius_v = radius_v;
  t.axis_u = axis_u;
  t.axis_v = axis_v;
  t.angular_speed = angular_speed;
  t.phase = phase;
  t.validate();
  return t;
}

void ReferenceTrajectory::validate() const {
  if (!center.allFinite()) throw ConfigError("reference center is not finite");
  if (kind == ReferenceKind::kFixed) return;
  if (!(radius_u > 0.0) || !(radius_v > 0.0) || !std::isfinite(radius_u) ||
      !std::isfinite(radius_v)) {
    throw ConfigError("reference radii must be positive and finite");
  }
  if (kind == ReferenceKind::kCircle && radius_u != radius_v) {
    throw ConfigError("circle reference needs equal radii");
  }
  if (!std::isfinite(angular_speed) || !std::isfinite(phase)) {
    throw ConfigError("reference angular speed and phase must be finite");
  }
  if (std::abs(axis_u.squaredNorm() - 1.0) > 1e-12 ||
      std::abs(axis_v.squaredNorm() - 1.0) > 1e-12 ||
      std::abs(axis_u.dot(axis_v)) > 1e-12) {
    throw ConfigError("reference plane axes must be orthonormal");
  }
}

double ReferenceTrajectory::period() const {
  if (kind == ReferenceKind::kFixed || angular_speed == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return kTwoPi / std::abs(angular_speed);
}

ReferenceSample sample_reference(const ReferenceTrajectory& traj, double t) {
  if (traj.kind == ReferenceKind::kFixed) {
    return {traj.center, Eigen::Vector3d::Zero()};
  }
  const double angle = traj.angular_speed * t + traj.phase;
  const double c = std::cos(angle), s = std::sin(angle);
  ReferenceSample out;
  out.x_d = traj.center + traj.radius_u * c * traj.axis_u +
            traj.radius_v * s * traj.axis_v;
  out.xdot_d = traj.angular_speed * (-traj.radius_u * s * traj.axis_u +
                                     traj.radius_v * c * traj.axis_v);
  return out;
}

WorkspaceBox WorkspaceBox::ur10_default() {
  return {Eigen::Vector3d(-0.9, -0.5, 0.2), Eigen::Vector3d(-0.4, 0.5, 0.7)};
}

bool WorkspaceBox::contains(const Eigen::Vector3d& p, double margin) const {
  return (p.array() >= lo.array() + margin).all() &&
         (p.array() <= hi.array() - margin).all();
}

void WorkspaceBox::validate() const {
  if (!lo.allFinite() || !hi.allFinite() || !(hi.array() > lo.array()).all()) {
    throw ConfigError("workspace box needs finite bounds with lo < hi");
  }
}

ReferenceTrajectory random_ellipse(std::uint64_t seed, const WorkspaceBox& box,
                                   const EllipseSampling& sampling) {
  box.validate();
  if (!(sampling.radius_min > 0.0) ||
      !(sampling.radius_max >= sampling.radius_min) ||
      !(sampling.speed_max >= sampling.speed_min)) {
    throw ConfigError("ellipse sampling ranges are invalid");
  }
  const Eigen::Vector3d extent = box.hi - box.lo;
  if ((extent.array() < 2.0 * sampling.radius_min).any()) {
    throw ConfigError("workspace box is too small for ellipses of radius " +
                      std::to_string(sampling.radius_min));
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < sampling.max_attempts; ++attempt) {
    const double ru = uniform(rng, sampling.radius_min, sampling.radius_max);
    const double rv = uniform(rng, sampling.radius_min, sampling.radius_max);
    const double reach = std::max(ru, rv);
    if ((extent.array() < 2.0 * reach).any()) continue;
    const Eigen::Vector3d center = uniform_in(
        rng, (box.lo.array() + reach).matrix(), (box.hi.array() - reach).matrix());
    const double speed = uniform(rng, sampling.speed_min, sampling.speed_max);
    const double phase = uniform(rng, 0.0, kTwoPi);

    Eigen::Vector3d u = gaussian3(rng);
    Eigen::Vector3d v = gaussian3(rng);
    if (u.norm() < 1e-6) continue;
    u.normalize();
    v -= v.dot(u) * u;
    if (v.norm() < 1e-6) continue;
    v.normalize();
    v -= v.dot(u) * u;
    v.normalize();
    return ReferenceTrajectory::ellipse(center, ru, rv, speed, u, v, phase);
  }
  throw ConfigError("could not sample a feasible ellipse in " +
                    std::to_string(sampling.max_attempts) + " attempts");
}

RegulationCase random_regulation_case(std::uint64_t seed,
                                      const KinematicModel& model,
                                      const WorkspaceBox& box,
                                      const JointSampling& joints) {
  box.validate();
  std::mt19937_64 rng(seed);
  RegulationCase c;
  c.target = uniform_in(rng, box.lo, box.hi);
  c.seed_config = sample_seed_config(rng, model, box, joints);
  return c;
}

TrackingCase random_tracking_case(std::uint64_t seed,
                                  const KinematicModel& model,
                                  const WorkspaceBox& box,
                                  const JointSampling& joints,
                                  const EllipseSampling& ellipse) {
  box.validate();
  std::mt19937_64 rng(derive_seed(seed, 0, 0));
  TrackingCase c;
  c.seed_config = sample_seed_config(rng, model, box, joints);
  c.reference = random_ellipse(derive_seed(seed, 1, 0), box, ellipse);
  return c;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                          std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(base) ^ stream) ^ index);
}

}  // namespace snac
