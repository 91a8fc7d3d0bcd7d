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

#include <vector>

#include <Eigen/Dense>

#include "snac/critic.hpp"
#include "snac/kinematics.hpp"

namespace snac {

using Vector6d = Eigen::Matrix<double, 6, 1>;

// State cost Q (3x3) and control cost R (m x m), both symmetric positive
// definite. R^-1 is computed once on construction.
class GainConfig {
 public:
  GainConfig() = default;
  GainConfig(Eigen::Matrix3d q, Eigen::MatrixXd r);

  static GainConfig identity(int dof);

  const Eigen::Matrix3d& q() const { return q_; }
  const Eigen::MatrixXd& r() const { return r_; }
  const Eigen::MatrixXd& r_inverse() const { return r_inv_; }
  int dof() const { return static_cast<int>(r_.rows()); }

  bool operator==(const GainConfig& other) const {
    return q_ == other.q_ && r_ == other.r_;
  }

 private:
  Eigen::Matrix3d q_ = Eigen::Matrix3d::Identity();
  Eigen::MatrixXd r_;
  Eigen::MatrixXd r_inv_;
};

struct AugmentedState {
  Eigen::Vector3d e = Eigen::Vector3d::Zero();
  Eigen::Vector3d x_d = Eigen::Vector3d::Zero();

  Vector6d stacked() const {
    Vector6d xi;
    xi << e, x_d;
    return xi;
  }
};

// xi_dot = F + G u  with  F = [-xd_dot; xd_dot],  G = [J; 0].
struct AugmentedDynamics {
  Vector6d f;
  Eigen::Matrix<double, 6, Eigen::Dynamic> g;
};

AugmentedDynamics assemble_augmented(const PositionJacobian& jacobian,
                                     const Eigen::Vector3d& xdot_d);

// u = -1/2 R^-1 J^T grad(sigma)^T W. Unclamped.
Eigen::VectorXd regulation_control(const CriticWeights& weights,
                                   const QuadraticBasis& basis,
                                   const Eigen::Vector3d& error,
                                   const PositionJacobian& jacobian,
                                   const GainConfig& gains);

// u = -1/2 R^-1 G^T grad(phi)^T W.
Eigen::VectorXd tracking_control(const CriticWeights& weights,
                                 const QuadraticBasis& basis,
                                 const AugmentedState& xi,
                                 const PositionJacobian& jacobian,
                                 const GainConfig& gains);

// H = grad(V)^T e_dot + e^T Q e + u^T R u with e_dot = J u.
double regulation_hamiltonian(const Eigen::Vector3d& error,
                              const Eigen::VectorXd& u,
                              const CriticWeights& weights,
                              const QuadraticBasis& basis,
                              const PositionJacobian& jacobian,
                              const GainConfig& gains);

// Tracking counterpart with xi_dot = F + G u and the e-block state cost.
double tracking_hamiltonian(const AugmentedState& xi,
                            const Eigen::Vector3d& xdot_d,
                            const Eigen::VectorXd& u,
                            const CriticWeights& weights,
                            const QuadraticBasis& basis,
                            const PositionJacobian& jacobian,
                            const GainConfig& gains);

struct ClampResult {
  Eigen::VectorXd u;
  bool clamped = false;
};

ClampResult clamp_velocity(const Eigen::VectorXd& u,
                           const std::vector<double>& limits);

}  // namespace snac
