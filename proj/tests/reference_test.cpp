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
#include <numbers>

#include <doctest.h>

#include "snac/error.hpp"
#include "snac/kinematics.hpp"
#include "snac/reference.hpp"

using namespace snac;

namespace {

ReferenceTrajectory circle_case() {
  return ReferenceTrajectory::circle(Eigen::Vector3d(-0.7, 0, 0.5), 0.2, 0.075,
                                     Eigen::Vector3d::UnitY(),
                                     Eigen::Vector3d::UnitZ());
}

}  // namespace

TEST_CASE("fixed target") {
  const Eigen::Vector3d p(-0.658, 0.626, 0.407);
  const auto r = ReferenceTrajectory::fixed(p);
  for (double t : {0.0, 1.0, 123.4}) {
    const auto s = sample_reference(r, t);
    CHECK(s.x_d == p);
    CHECK(s.xdot_d.isZero(0.0));
  }
}

TEST_CASE("circle parameterization") {
  const auto r = circle_case();
  const auto s0 = sample_reference(r, 0.0);
  CHECK((s0.x_d - Eigen::Vector3d(-0.7, 0.2, 0.5)).norm() < 1e-15);
  CHECK((s0.xdot_d - Eigen::Vector3d(0, 0, 0.2 * 0.075)).norm() < 1e-15);
  for (double t = 0.0; t < 200.0; t += 3.7) {
    const auto s = sample_reference(r, t);
    CHECK((s.x_d - r.center).norm() == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(s.xdot_d.norm() == doctest::Approx(0.015).epsilon(1e-13));
  }
}

TEST_CASE("reference derivative and period") {
  const auto ell = ReferenceTrajectory::ellipse(
      Eigen::Vector3d(-0.6, 0.1, 0.4), 0.12, 0.07, 0.3,
      Eigen::Vector3d(1, 1, 0).normalized(), Eigen::Vector3d(0, 0, 1), 0.4);
  for (const auto& r : {circle_case(), ell}) {
    const double h = 1e-4;
    for (double t = 0.5; t < 60.0; t += 1.3) {
      const Eigen::Vector3d fd =
          (sample_reference(r, t + h).x_d - sample_reference(r, t - h).x_d) /
          (2 * h);
      CHECK((fd - sample_reference(r, t).xdot_d).norm() < 1e-8);
      const Eigen::Vector3d later = sample_reference(r, t + r.period()).x_d;
      CHECK((later - sample_reference(r, t).x_d).norm() < 1e-10);
    }
    CHECK(r.period() == doctest::Approx(2 * std::numbers::pi / r.angular_speed));
  }
}

TEST_CASE("reference validation") {
  auto bad = circle_case();
  bad.axis_v = Eigen::Vector3d(0, 1, 1);
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  auto flat = circle_case();
  flat.radius_u = 0.0;
  CHECK_THROWS_AS(flat.validate(), ConfigError);
  CHECK_NOTHROW(circle_case().validate());
}

TEST_CASE("random ellipse") {
  const WorkspaceBox tiny{Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(0.05, 0.05, 0.05)};
  CHECK_THROWS_AS(random_ellipse(1, tiny), ConfigError);

  const auto box = WorkspaceBox::ur10_default();
  CHECK(random_ellipse(42, box) == random_ellipse(42, box));
  CHECK_FALSE(random_ellipse(42, box) == random_ellipse(43, box));

  int outside = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto r = random_ellipse(seed, box);
    CHECK(r.kind == ReferenceKind::kEllipse);
    CHECK(r.radius_u >= 0.05);
    CHECK(r.radius_u <= 0.15);
    CHECK(r.angular_speed >= 0.05);
    CHECK(r.angular_speed <= 0.15);
    const double period = r.period();
    for (int k = 0; k < 64; ++k) {
      const auto s = sample_reference(r, period * k / 64.0);
      if ((s.x_d.array() < box.lo.array()).any() ||
          (s.x_d.array() > box.hi.array()).any())
        ++outside;
    }
  }
  CHECK(outside == 0);
}

TEST_CASE("random regulation cases") {
  const auto model = KinematicModel::ur10();
  const auto box = WorkspaceBox::ur10_default();
  const auto a = random_regulation_case(7, model, box);
  const auto b = random_regulation_case(7, model, box);
  CHECK(a.seed_config == b.seed_config);
  CHECK(a.target == b.target);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto c = random_regulation_case(derive_seed(5, 0, seed), model, box);
    CHECK((c.target.array() >= box.lo.array()).all());
    CHECK((c.target.array() <= box.hi.array()).all());
    const Eigen::Vector3d x = forward_kinematics(model, c.seed_config);
    CHECK((x.array() >= box.lo.array()).all());
    CHECK((x.array() <= box.hi.array()).all());
    CHECK((c.seed_config.array().abs() <= std::numbers::pi).all());
  }
}

TEST_CASE("tracking cases and seed streams") {
  const auto model = KinematicModel::ur10();
  const auto box = WorkspaceBox::ur10_default();
  const auto t = random_tracking_case(3, model, box);
  CHECK(t.seed_config.size() == 6);
  CHECK(t.reference.kind == ReferenceKind::kEllipse);
  CHECK(derive_seed(1, 0, 0) != derive_seed(1, 0, 1));
  CHECK(derive_seed(1, 0, 0) != derive_seed(1, 1, 0));
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
}
