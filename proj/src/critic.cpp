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

#include "snac/critic.hpp"

#include <cmath>
#include <random>
#include <string>

#include "snac/control.hpp"
#include "snac/error.hpp"

namespace snac {
namespace {

void check_weights(const CriticWeights& weights, const QuadraticBasis& basis) {
  if (weights.w.size() != basis.size()) {
    throw ConfigError("critic has " + std::to_string(weights.w.size()) +
                      " weights, basis has " + std::to_string(basis.size()) +
                      " features");
  }
}

void check_step_inputs(const PositionJacobian& jacobian,
                       const Eigen::MatrixXd& r_inverse, double dt) {
  if (r_inverse.rows() != jacobian.cols() ||
      r_inverse.cols() != jacobian.cols()) {
    throw ConfigError("R^-1 must be " + std::to_string(jacobian.cols()) +
                      "x" + std::to_string(jacobian.cols()));
  }
  if (!(dt > 0.0)) throw ConfigError("time step must be positive");
}

CriticWeights checked(Eigen::VectorXd w) {
  if (!w.allFinite()) {
    throw NumericalError("critic weights became non-finite");
  }
  return {std::move(w)};
}

}  // namespace

QuadraticBasis::QuadraticBasis(BasisKind kind, int input_dim)
    : kind_(kind), input_dim_(input_dim) {
  for (int i = 0; i < input_dim; ++i) {
    for (int j = i; j < input_dim; ++j) pairs_.emplace_back(i, j);
  }
}

QuadraticBasis QuadraticBasis::regulation() {
  return QuadraticBasis(BasisKind::kRegulation, 3);
}

QuadraticBasis QuadraticBasis::tracking() {
  return QuadraticBasis(BasisKind::kTracking, 6);
}

void QuadraticBasis::check_input(const Eigen::VectorXd& s) const {
  if (s.size() != input_dim_) {
    throw ConfigError("basis expects a " + std::to_string(input_dim_) +
                      "-vector, got " + std::to_string(s.size()));
  }
}

Eigen::VectorXd QuadraticBasis::features(const Eigen::VectorXd& s) const {
  check_input(s);
  Eigen::VectorXd out(size());
  for (int r = 0; r < size(); ++r) {
    out[r] = s[pairs_[r].first] * s[pairs_[r].second];
  }
  return out;
}

Eigen::MatrixXd QuadraticBasis::gradient(const Eigen::VectorXd& s) const {
  check_input(s);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(size(), input_dim_);
  for (int r = 0; r < size(); ++r) {
    const auto [i, j] = pairs_[r];
    g(r, i) += s[j];
    g(r, j) += s[i];
  }
  return g;
}

CriticWeights CriticWeights::random(int size, std::uint64_t seed,
                                    double range) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-range, range);
  Eigen::VectorXd w(size);
  for (int i = 0; i < size; ++i) w[i] = dist(rng);
  return {w};
}

double value_estimate(const CriticWeights& weights, const QuadraticBasis& basis,
                      const Eigen::VectorXd& s) {
  check_weights(weights, basis);
  return weights.w.dot(basis.features(s));
}

void LearningRateSchedule::validate() const {
  if (!std::isfinite(alpha_initial) || alpha_initial < 0.0) {
    throw ConfigError("alpha_initial must be finite and >= 0");
  }
  if (!std::isfinite(alpha_final) || !(alpha_final > 0.0)) {
    throw ConfigError("alpha_final must be finite and > 0");
  }
  if (!std::isfinite(n_switch) || !(n_switch > 0.0)) {
    throw ConfigError("n_switch must be finite and > 0");
  }
  if (!std::isfinite(clock_period) || !(clock_period > 0.0)) {
    throw ConfigError("clock_period must be finite and > 0");
  }
}

double LearningRateSchedule::at(double k) const {
  return alpha_initial * std::tanh(n_switch - k) + alpha_final;
}

CriticWeights regulation_weight_step(const CriticWeights& weights,
                                     const QuadraticBasis& basis,
                                     const Eigen::Vector3d& error,
                                     const PositionJacobian& jacobian,
                                     const Eigen::MatrixXd& r_inverse,
                                     double alpha, double dt) {
  if (basis.kind() != BasisKind::kRegulation) {
    throw ConfigError("regulation update needs the regulation basis");
  }
  check_weights(weights, basis);
  check_step_inputs(jacobian, r_inverse, dt);
  // grad(Js)(e) = e for Js = e^T e / 2.
  const Eigen::Vector3d drive =
      jacobian * (r_inverse * (jacobian.transpose() * error));
  return checked(weights.w + (dt * alpha) * (basis.gradient(error) * drive));
}

CriticWeights tracking_weight_step(const CriticWeights& weights,
                                   const QuadraticBasis& basis,
                                   const Eigen::Matrix<double, 6, 1>& xi,
                                   const PositionJacobian& jacobian,
                                   const Eigen::MatrixXd& r_inverse,
                                   double alpha, double dt) {
  if (basis.kind() != BasisKind::kTracking) {
    throw ConfigError("tracking update needs the tracking basis");
  }
  check_weights(weights, basis);
  check_step_inputs(jacobian, r_inverse, dt);
  const auto g = assemble_augmented(jacobian, Eigen::Vector3d::Zero()).g;
  const Eigen::Matrix<double, 6, 1> drive =
      g * (r_inverse * (g.transpose() * xi));
  return checked(weights.w + (dt * alpha) * (basis.gradient(xi) * drive));
}

}  // namespace snac
