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

#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "snac/critic.hpp"
#include "snac/error.hpp"
#include "test_support.hpp"

using namespace snac;
using snac::testing::random_spd;
using snac::testing::uniform_matrix;
using snac::testing::uniform_vector;

namespace {

// Brute-force monomials for i <= j, independent of the library ordering code.
Eigen::VectorXd brute_features(const Eigen::VectorXd& s) {
  const int n = static_cast<int>(s.size());
  Eigen::VectorXd out(n * (n + 1) / 2);
  int r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out(r++) = s(i) * s(j);
  return out;
}

Eigen::MatrixXd fd_gradient(const QuadraticBasis& b, const Eigen::VectorXd& s,
                            double h) {
  Eigen::MatrixXd g(b.size(), b.input_dim());
  for (int c = 0; c < b.input_dim(); ++c) {
    Eigen::VectorXd p = s, m = s;
    p(c) += h;
    m(c) -= h;
    g.col(c) = (b.features(p) - b.features(m)) / (2 * h);
  }
  return g;
}

}  // namespace

TEST_CASE("basis sizes and monomial order") {
  const auto reg = QuadraticBasis::regulation();
  const auto trk = QuadraticBasis::tracking();
  CHECK(reg.size() == 6);
  CHECK(reg.input_dim() == 3);
  CHECK(trk.size() == 21);
  CHECK(trk.input_dim() == 6);

  const std::vector<std::pair<int, int>> expected = {
      {0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  CHECK(reg.monomials() == expected);

  Eigen::VectorXd e1 = Eigen::Vector3d(1, 0, 0);
  Eigen::VectorXd f = reg.features(e1);
  Eigen::VectorXd want(6);
  want << 1, 0, 0, 0, 0, 0;
  CHECK(f == want);
  CHECK(reg.features(Eigen::VectorXd::Zero(3)).isZero(0.0));
  CHECK(reg.gradient(Eigen::VectorXd::Zero(3)).isZero(0.0));
  CHECK(trk.features(Eigen::VectorXd::Zero(6)).isZero(0.0));
  CHECK(trk.gradient(Eigen::VectorXd::Zero(6)).isZero(0.0));
}

TEST_CASE("tracking features match brute-force enumeration") {
  const auto trk = QuadraticBasis::tracking();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Eigen::VectorXd s = uniform_vector(rng, 6, -2, 2);
    CHECK((trk.features(s) - brute_features(s)).norm() == 0.0);
  }
}

TEST_CASE("product rule example") {
  const auto reg = QuadraticBasis::regulation();
  const Eigen::MatrixXd g = reg.gradient(Eigen::Vector3d(1, 2, 3));
  CHECK(g.rows() == 6);
  CHECK(g.cols() == 3);
  CHECK(g.row(1) == Eigen::RowVector3d(2, 1, 0));
  CHECK(g.row(0) == Eigen::RowVector3d(2, 0, 0));
  CHECK(g.row(5) == Eigen::RowVector3d(0, 0, 6));
}

TEST_CASE("basis gradients match central differences") {
  std::mt19937_64 rng(5);
  for (const auto& b : {QuadraticBasis::regulation(), QuadraticBasis::tracking()}) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::VectorXd s = uniform_vector(rng, b.input_dim(), -1.5, 1.5);
      const Eigen::MatrixXd ga = b.gradient(s);
      const Eigen::MatrixXd gn = fd_gradient(b, s, 1e-5);
      worst = std::max(worst, (ga - gn).norm() / std::max(1.0, ga.norm()));
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("dimension checks") {
  const auto reg = QuadraticBasis::regulation();
  CHECK_THROWS_AS(reg.features(Eigen::VectorXd::Zero(4)), ConfigError);
  CHECK_THROWS_AS(reg.gradient(Eigen::VectorXd::Zero(2)), ConfigError);
  CHECK_THROWS_AS(value_estimate(CriticWeights::zero(5), reg,
                                 Eigen::VectorXd::Zero(3)),
                  ConfigError);
}

TEST_CASE("value estimate") {
  const auto trk = QuadraticBasis::tracking();
  std::mt19937_64 rng(7);
  const Eigen::VectorXd s = uniform_vector(rng, 6, -1, 1);
  CHECK(value_estimate(CriticWeights::zero(21), trk, s) == 0.0);
  const CriticWeights w{uniform_vector(rng, 21, -1, 1)};
  CHECK(value_estimate(w, trk, Eigen::VectorXd::Zero(6)) == 0.0);

  double sum = 0.0;
  int r = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) sum += w.w(r++) * s(i) * s(j);
  CHECK(value_estimate(w, trk, s) == doctest::Approx(sum).epsilon(1e-14));
}

TEST_CASE("random weights are seeded and bounded") {
  const auto a = CriticWeights::random(21, 9, 0.5);
  const auto b = CriticWeights::random(21, 9, 0.5);
  const auto c = CriticWeights::random(21, 10, 0.5);
  CHECK(a.w == b.w);
  CHECK(a.w != c.w);
  CHECK(a.w.cwiseAbs().maxCoeff() <= 0.5);
}

TEST_CASE("learning rate schedule") {
  const LearningRateSchedule reg{100.0, 150.0, 50.0};
  CHECK(learning_rate(reg, 0) == doctest::Approx(100.0 * std::tanh(50.0) + 150.0));
  CHECK(learning_rate(reg, 0) == doctest::Approx(250.0));
  CHECK(learning_rate(reg, 1e6) == doctest::Approx(50.0));
  const LearningRateSchedule trk{20.0, 70.0, 10.0};
  CHECK(learning_rate(trk, 10) == doctest::Approx(70.0));
  // the clock ticks once per 8 ms
  CHECK(trk.at_time(0.08) == doctest::Approx(70.0));
  CHECK_NOTHROW(reg.validate());
  CHECK_THROWS_AS((LearningRateSchedule{-1.0, 1.0, 1.0}.validate()), ConfigError);
  CHECK_THROWS_AS((LearningRateSchedule{1.0, 0.0, 1.0}.validate()), ConfigError);
}

TEST_CASE("regulation weight step") {
  const auto reg = QuadraticBasis::regulation();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const CriticWeights w{uniform_vector(rng, 6, -1, 1)};
    const Eigen::Vector3d e = uniform_vector(rng, 3, -0.3, 0.3);
    const PositionJacobian j = uniform_matrix(rng, 3, 6, -1, 1);
    const Eigen::MatrixXd rinv = random_spd(rng, 6).inverse();

    CHECK(regulation_weight_step(w, reg, Eigen::Vector3d::Zero(), j, rinv, 3.0,
                                 0.008).w == w.w);
    CHECK(regulation_weight_step(w, reg, e, j, rinv, 0.0, 0.008).w == w.w);

    // matrix chain composed as separate products
    const Eigen::MatrixXd grad = reg.gradient(e);
    const Eigen::MatrixXd gj = grad * j;
    const Eigen::MatrixXd gjr = gj * rinv;
    const Eigen::MatrixXd gjrjt = gjr * j.transpose();
    const Eigen::VectorXd want = w.w + 0.008 * 2.5 * (gjrjt * e);
    const auto got = regulation_weight_step(w, reg, e, j, rinv, 2.5, 0.008);
    CHECK((got.w - want).norm() < 1e-12 * (1 + want.norm()));

    // M = J R^-1 J^T is symmetric PSD
    const Eigen::Matrix3d m = j * rinv * j.transpose();
    CHECK((m - m.transpose()).norm() < 1e-10);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
    CHECK(es.eigenvalues().minCoeff() >= -1e-12);
  }
}

TEST_CASE("tracking weight step") {
  const auto trk = QuadraticBasis::tracking();
  const auto reg = QuadraticBasis::regulation();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const CriticWeights w{uniform_vector(rng, 21, -1, 1)};
    Eigen::Matrix<double, 6, 1> xi = uniform_vector(rng, 6, -0.8, 0.8);
    const PositionJacobian j = uniform_matrix(rng, 3, 6, -1, 1);
    const Eigen::MatrixXd rinv = random_spd(rng, 6).inverse();

    Eigen::Matrix<double, 6, 1> zero_e = xi;
    zero_e.head<3>().setZero();
    CHECK(tracking_weight_step(w, trk, zero_e, j, rinv, 5.0, 0.008).w == w.w);
    CHECK(tracking_weight_step(w, trk, xi, j, rinv, 0.0, 0.008).w == w.w);

    // block structure: only the first three gradient columns see the drive
    const Eigen::Vector3d e = xi.head<3>();
    const Eigen::Vector3d drive = j * rinv * j.transpose() * e;
    const Eigen::VectorXd want =
        w.w + 0.008 * 4.0 * trk.gradient(xi).leftCols<3>() * drive;
    const auto got = tracking_weight_step(w, trk, xi, j, rinv, 4.0, 0.008);
    CHECK((got.w - want).norm() < 1e-12 * (1 + want.norm()));

    // x_d perturbation: the increment changes only through grad(phi)
    Eigen::Matrix<double, 6, 1> moved = xi;
    moved.tail<3>() += uniform_vector(rng, 3, -0.5, 0.5);
    const Eigen::VectorXd inc =
        tracking_weight_step(w, trk, moved, j, rinv, 4.0, 0.008).w - w.w;
    const Eigen::VectorXd via_grad =
        0.008 * 4.0 * trk.gradient(moved).leftCols<3>() * drive;
    CHECK((inc - via_grad).norm() < 1e-12 * (1 + inc.norm()));
  }
  // wrong basis
  CHECK_THROWS_AS(tracking_weight_step(CriticWeights::zero(6), reg,
                                       Eigen::Matrix<double, 6, 1>::Zero(),
                                       PositionJacobian::Zero(3, 6),
                                       Eigen::MatrixXd::Identity(6, 6), 1, 1),
                  ConfigError);
}

TEST_CASE("non-finite update is a numerical error") {
  const auto reg = QuadraticBasis::regulation();
  const CriticWeights w = CriticWeights::zero(6);
  const PositionJacobian j = PositionJacobian::Ones(3, 6);
  const Eigen::MatrixXd rinv = Eigen::MatrixXd::Identity(6, 6);
  CHECK_THROWS_AS(regulation_weight_step(w, reg, Eigen::Vector3d(1, 1, 1), j, rinv,
                                         std::numeric_limits<double>::infinity(),
                                         0.008),
                  NumericalError);
  CHECK_THROWS_AS(regulation_weight_step(w, reg, Eigen::Vector3d(1, 1, 1), j, rinv,
                                         1.0, 0.0),
                  ConfigError);
}
