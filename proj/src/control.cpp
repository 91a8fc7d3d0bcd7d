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

#include "snac/control.hpp"

#include <algorithm>
#include <string>

#include "snac/error.hpp"

namespace snac {
namespace {

void check_spd(const Eigen::MatrixXd& m, const char* name) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw ConfigError(std::string(name) + " must be a non-empty square matrix");
  }
  if (!m.allFinite()) {
    throw ConfigError(std::string(name) + " has non-finite entries");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (((m - m.transpose()).cwiseAbs().maxCoeff()) > 1e-12 * scale) {
    throw ConfigError(std::string(name) + " must be symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw ConfigError(std::string(name) + " must be positive definite");
  }
}

void check_control_dims(const CriticWeights& weights,
                        const QuadraticBasis& basis,
                        const PositionJacobian& jacobian,
                        const GainConfig& gains) {
  if (weights.w.size() != basis.size()) {
    throw ConfigError("weight vector does not match the basis size");
  }
  if (gains.dof() != jacobian.cols()) {
    throw ConfigError("R is " + std::to_string(gains.dof()) +
                      "x" + std::to_string(gains.dof()) + " but J has " +
                      std::to_string(jacobian.cols()) + " columns");
  }
}

Eigen::VectorXd checked(Eigen::VectorXd u) {
  if (!u.allFinite()) throw NumericalError("control output is non-finite");
  return u;
}

}  // namespace

GainConfig::GainConfig(Eigen::Matrix3d q, Eigen::MatrixXd r)
    : q_(std::move(q)), r_(std::move(r)) {
  check_spd(q_, "Q");
  check_spd(r_, "R");
  r_inv_ = r_.llt().solve(Eigen::MatrixXd::Identity(r_.rows(), r_.cols()));
  // Symmetrize so downstream J R^-1 J^T stays exactly symmetric.
  r_inv_ = 0.5 * (r_inv_ + r_inv_.transpose()).eval();
}

GainConfig GainConfig::identity(int dof) {
  return GainConfig(Eigen::Matrix3d::Identity(),
                    Eigen::MatrixXd::Identity(dof, dof));
}

AugmentedDynamics assemble_augmented(const PositionJacobian& jacobian,
                                     const Eigen::Vector3d& xdot_d) {
  AugmentedDynamics dyn;
  dyn.f << -xdot_d, xdot_d;
  dyn.g.setZero(6, jacobian.cols());
  dyn.g.topRows<3>() = jacobian;
  return dyn;
}

Eigen::VectorXd regulation_control(const CriticWeights& weights,
                                   const QuadraticBasis& basis,
                                   const Eigen::Vector3d& error,
                                   const PositionJacobian& jacobian,
                                   const GainConfig& gains) {
  check_control_dims(weights, basis, jacobian, gains);
  if (basis.kind() != BasisKind::kRegulation) {
    throw ConfigError("regulation control needs the regulation basis");
  }
  const Eigen::Vector3d grad_v = basis.gradient(error).transpose() * weights.w;
  return checked(-0.5 * gains.r_inverse() * (jacobian.transpose() * grad_v));
}

Eigen::VectorXd tracking_control(const CriticWeights& weights,
                                 const QuadraticBasis& basis,
                                 const AugmentedState& xi,
                                 const PositionJacobian& jacobian,
                                 const GainConfig& gains) {
  check_control_dims(weights, basis, jacobian, gains);
  if (basis.kind() != BasisKind::kTracking) {
    throw ConfigError("tracking control needs the tracking basis");
  }
  const Vector6d grad_v =
      basis.gradient(xi.stacked()).transpose() * weights.w;
  const auto g = assemble_augmented(jacobian, Eigen::Vector3d::Zero()).g;
  return checked(-0.5 * gains.r_inverse() * (g.transpose() * grad_v));
}

double regulation_hamiltonian(const Eigen::Vector3d& error,
                              const Eigen::VectorXd& u,
                              const CriticWeights& weights,
                              const QuadraticBasis& basis,
                              const PositionJacobian& jacobian,
                              const GainConfig& gains) {
  check_control_dims(weights, basis, jacobian, gains);
  if (u.size() != jacobian.cols()) {
    throw ConfigError("control vector does not match the Jacobian");
  }
  const Eigen::Vector3d grad_v = basis.gradient(error).transpose() * weights.w;
  const Eigen::Vector3d e_dot = jacobian * u;
  return grad_v.dot(e_dot) + error.dot(gains.q() * error) +
         u.dot(gains.r() * u);
}

double tracking_hamiltonian(const AugmentedState& xi,
                            const Eigen::Vector3d& xdot_d,
                            const Eigen::VectorXd& u,
                            const CriticWeights& weights,
                            const QuadraticBasis& basis,
                            const PositionJacobian& jacobian,
                            const GainConfig& gains) {
  check_control_dims(weights, basis, jacobian, gains);
  if (u.size() != jacobian.cols()) {
    throw ConfigError("control vector does not match the Jacobian");
  }
  const Vector6d grad_v =
      basis.gradient(xi.stacked()).transpose() * weights.w;
  const AugmentedDynamics dyn = assemble_augmented(jacobian, xdot_d);
  const Vector6d xi_dot = dyn.f + dyn.g * u;
  // diag{Q, 0}: the reference block carries no state cost.
  return grad_v.dot(xi_dot) + xi.e.dot(gains.q() * xi.e) +
         u.dot(gains.r() * u);
}

ClampResult clamp_velocity(const Eigen::VectorXd& u,
                           const std::vector<double>& limits) {
  if (static_cast<Eigen::Index>(limits.size()) != u.size()) {
    throw ConfigError("one velocity limit per joint is required");
  }
  ClampResult out{u, false};
  for (Eigen::Index j = 0; j < u.size(); ++j) {
    const double lim = limits[j];
    if (!(lim > 0.0)) throw ConfigError("velocity limits must be positive");
    if (u[j] > lim) {
      out.u[j] = lim;
      out.clamped = true;
    } else if (u[j] < -lim) {
      out.u[j] = -lim;
      out.clamped = true;
    }
  }
  return out;
}

}  // namespace snac
