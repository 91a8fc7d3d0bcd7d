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

enum class BasisKind { kRegulation, kTracking };

// All degree-2 monomials s_i * s_j (i <= j) of an n-dimensional state, in
// row-major (i, then j) order: e1^2, e1e2, e1e3, e2^2, e2e3, e3^2 for n = 3.
class QuadraticBasis {
 public:
  static QuadraticBasis regulation();  // over e, n = 3, l = 6
  static QuadraticBasis tracking();    // over xi = [e; x_d], n = 6, l = 21

  BasisKind kind() const { return kind_; }
  int input_dim() const { return input_dim_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& monomials() const { return pairs_; }

  Eigen::VectorXd features(const Eigen::VectorXd& s) const;
  // Row r holds the gradient of monomial r with respect to s.
  Eigen::MatrixXd gradient(const Eigen::VectorXd& s) const;

 private:
  QuadraticBasis(BasisKind kind, int input_dim);

  void check_input(const Eigen::VectorXd& s) const;

  BasisKind kind_;
  int input_dim_;
  std::vector<std::pair<int, int>> pairs_;
};

struct CriticWeights {
  Eigen::VectorXd w;

  // Uniform on [-range, range] from a seeded stream.
  static CriticWeights random(int size, std::uint64_t seed, double range);
  static CriticWeights zero(int size) {
    return {Eigen::VectorXd::Zero(size)};
  }
};

double value_estimate(const CriticWeights& weights, const QuadraticBasis& basis,
                      const Eigen::VectorXd& s);

// alpha(k) = alpha_initial * tanh(n_switch - k) + alpha_final. k ticks
// once per clock_period seconds (the 125 Hz control period by default), so
// at dt = clock_period it is the integrator step index and the schedule
// keeps its shape in time when dt changes.
struct LearningRateSchedule {
  double alpha_initial = 0.0;
  double alpha_final = 1.0;
  double n_switch = 1.0;
  double clock_period = 0.008;

  void validate() const;
  double at(double k) const;
  double at_time(double t) const { return at(t / clock_period); }

  bool operator==(const LearningRateSchedule&) const = default;
};

inline double learning_rate(const LearningRateSchedule& schedule, double k) {
  return schedule.at(k);
}

// Explicit Euler step of  dW/dt = alpha * grad(sigma) J R^-1 J^T e.
CriticWeights regulation_weight_step(const CriticWeights& weights,
                                     const QuadraticBasis& basis,
                                     const Eigen::Vector3d& error,
                                     const PositionJacobian& jacobian,
                                     const Eigen::MatrixXd& r_inverse,
                                     double alpha, double dt);

// Explicit Euler step of  dW/dt = alpha * grad(phi) G R^-1 G^T xi  with
// G = [J; 0].
CriticWeights tracking_weight_step(const CriticWeights& weights,
                                   const QuadraticBasis& basis,
                                   const Eigen::Matrix<double, 6, 1>& xi,
                                   const PositionJacobian& jacobian,
                                   const Eigen::MatrixXd& r_inverse,
                                   double alpha, double dt);

}  // namespace snac
