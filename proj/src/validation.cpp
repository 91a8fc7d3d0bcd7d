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

#include "snac/validation.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "snac/control.hpp"
#include "snac/critic.hpp"
#include "snac/kinematics.hpp"
#include "snac/reference.hpp"

namespace snac {
namespace {

// Expanded UR-family position formula; shares nothing with the matrix
// product in forward_kinematics.
Eigen::Vector3d ur_closed_form(const KinematicModel& m, const JointVector& q) {
  const auto& r = m.rows();
  const double a2 = r[1].a, a3 = r[2].a, d1 = r[0].d, d4 = r[3].d,
               d5 = r[4].d, d6 = r[5].d;
  const double c1 = std::cos(q[0]), s1 = std::sin(q[0]);
  const double c2 = std::cos(q[1]), s2 = std::sin(q[1]);
  const double c23 = std::cos(q[1] + q[2]), s23 = std::sin(q[1] + q[2]);
  const double c234 = std::cos(q[1] + q[2] + q[3]);
  const double s234 = std::sin(q[1] + q[2] + q[3]);
  const double c5 = std::cos(q[4]), s5 = std::sin(q[4]);
  return {a2 * c1 * c2 + a3 * c1 * c23 + d4 * s1 + d5 * s234 * c1 +
              d6 * s1 * c5 - d6 * s5 * c1 * c234,
          a2 * s1 * c2 + a3 * s1 * c23 - d4 * c1 + d5 * s1 * s234 -
              d6 * s1 * s5 * c234 - d6 * c1 * c5,
          a2 * s2 + a3 * s23 + d1 - d5 * c234 - d6 * s5 * s234};
}

Eigen::VectorXd random_vector(std::mt19937_64& rng, int n, double scale) {
  std::uniform_real_distribution<double> d(-scale, scale);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

double rel_err(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

CheckResult check(std::string name, double worst, double tol) {
  return {std::move(name), worst <= tol,
          fmt::format("worst {:.3e} (tolerance {:.0e})", worst, tol)};
}

Eigen::MatrixXd fd_basis_gradient(const QuadraticBasis& b, const Eigen::VectorXd& s) {
  const double h = 1e-5;
  Eigen::MatrixXd g(b.size(), b.input_dim());
  for (int j = 0; j < b.input_dim(); ++j) {
    Eigen::VectorXd p = s, m = s;
    p[j] += h;
    m[j] -= h;
    g.col(j) = (b.features(p) - b.features(m)) / (2 * h);
  }
  return g;
}

}  // namespace

std::vector<CheckResult> run_validation(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  const KinematicModel ur10 = KinematicModel::ur10();
  const int m = ur10.dof();
  std::vector<CheckResult> out;

  double fk = 0.0, jac = 0.0;
  for (int i = 0; i < samples; ++i) {
    const JointVector q = random_vector(rng, m, std::numbers::pi);
    fk = std::max(fk, (forward_kinematics(ur10, q) - ur_closed_form(ur10, q)).norm());
    jac = std::max(jac, rel_err(geometric_jacobian(ur10, q),
                                numerical_jacobian(ur10, q, 1e-6)));
  }
  out.push_back(check("forward kinematics vs closed-form UR position", fk, 1e-12));
  out.push_back(check("analytic vs central-difference Jacobian", jac, 1e-6));

  for (const QuadraticBasis& b : {QuadraticBasis::regulation(), QuadraticBasis::tracking()}) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const Eigen::VectorXd s = random_vector(rng, b.input_dim(), 1.0);
      worst = std::max(worst, rel_err(b.gradient(s), fd_basis_gradient(b, s)));
    }
    out.push_back(check(fmt::format("{} basis gradient vs finite differences",
                                    b.kind() == BasisKind::kRegulation ? "regulation"
                                                                       : "tracking"),
                        worst, 1e-6));
  }

  const QuadraticBasis reg = QuadraticBasis::regulation();
  const QuadraticBasis trk = QuadraticBasis::tracking();
  double stat_reg = 0.0, stat_trk = 0.0, ham = 0.0;
  for (int i = 0; i < samples; ++i) {
    const JointVector q = random_vector(rng, m, std::numbers::pi);
    const PositionJacobian j = geometric_jacobian(ur10, q);
    Eigen::MatrixXd a = random_vector(rng, m * m, 1.0).reshaped(m, m);
    const GainConfig g(Eigen::Matrix3d::Identity(),
                       a * a.transpose() + Eigen::MatrixXd::Identity(m, m));
    const Eigen::Vector3d e = random_vector(rng, 3, 0.5);
    const CriticWeights wr{random_vector(rng, reg.size(), 5.0)};
    const Eigen::VectorXd ur = regulation_control(wr, reg, e, j, g);
    const double scale_r = 1.0 + wr.w.norm() * j.norm();
    stat_reg = std::max(stat_reg, (2.0 * g.r() * ur + j.transpose() *
                                   (reg.gradient(e).transpose() * wr.w)).norm() / scale_r);

    const AugmentedState xi{e, random_vector(rng, 3, 1.0)};
    const CriticWeights wt{random_vector(rng, trk.size(), 5.0)};
    const Eigen::VectorXd ut = tracking_control(wt, trk, xi, j, g);
    const auto dyn = assemble_augmented(j, Eigen::Vector3d::Zero());
    const double scale_t = 1.0 + wt.w.norm() * j.norm();
    stat_trk = std::max(stat_trk, (2.0 * g.r() * ut + dyn.g.transpose() *
                                   (trk.gradient(xi.stacked()).transpose() * wt.w)).norm() / scale_t);

    const Eigen::VectorXd du = random_vector(rng, m, 1.0);
    const double h0 = regulation_hamiltonian(e, ur, wr, reg, j, g);
    const double h1 = regulation_hamiltonian(e, ur + du, wr, reg, j, g);
    // H(u* + du) - H(u*) = du^T R du exactly; report the shortfall.
    ham = std::max(ham, std::max(0.0, h0 - h1));
  }
  out.push_back(check("regulation control stationarity", stat_reg, 1e-10));
  out.push_back(check("tracking control stationarity", stat_trk, 1e-10));
  out.push_back(check("Hamiltonian minimized by the control law", ham, 0.0));

  const ReferenceTrajectory circle = ReferenceTrajectory::circle(
      Eigen::Vector3d(-0.7, 0.0, 0.5), 0.2, 0.075, Eigen::Vector3d::UnitY(),
      Eigen::Vector3d::UnitZ());
  double ref = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = std::uniform_real_distribution<double>(0.0, 200.0)(rng);
    const double h = 1e-4;
    const Eigen::Vector3d fd =
        (sample_reference(circle, t + h).x_d - sample_reference(circle, t - h).x_d) / (2 * h);
    ref = std::max(ref, (fd - sample_reference(circle, t).xdot_d).cwiseAbs().maxCoeff());
  }
  out.push_back(check("reference velocity vs finite differences", ref, 1e-8));
  return out;
}

}  // namespace snac
