// Copyright 2026 The rp2widths Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "rp2w/ellipsoid.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"

namespace rp2w {
namespace {

constexpr double kPi = std::numbers::pi;
// Complete elliptic integral oracle (tests/oracles): 4 E(3/4).
constexpr double kPerimeterOneHalf = 4.844224110273838;

TEST_SUITE("ellipsoid") {

TEST_CASE("parameters must be positive") {
  CHECK_THROWS_AS(EllipsoidParams(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(EllipsoidParams(1, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(EllipsoidParams(1, 1, NAN), std::invalid_argument);
  const EllipsoidParams a(1, 2, 3);
  CHECK(a(1) == 1);
  CHECK(a(3) == 3);
  CHECK(a.constraint(Vec3(1, 0, 0)) == 0.0);
}

TEST_CASE("axial lengths") {
  CHECK(std::abs(gamma_length(1, EllipsoidParams::round()) - 2 * kPi) <= 1e-12);
  CHECK(std::abs(gamma_length(1, EllipsoidParams(4, 1, 1)) - 2 * kPi) <= 1e-12);
  CHECK(std::abs(gamma_length(3, EllipsoidParams(1, 1, 1.3)) - 2 * kPi) <= 1e-12);
  CHECK(std::abs(ellipse_perimeter(1.0, 0.5) - kPerimeterOneHalf) <= 1e-12);
  CHECK(std::abs(ellipse_perimeter(0.5, 1.0) - kPerimeterOneHalf) <= 1e-12);
  CHECK_THROWS_AS(gamma_length(4, EllipsoidParams::round()), std::invalid_argument);
  CHECK_THROWS_AS(ellipse_perimeter(0.0, 1.0), std::invalid_argument);

  const auto l = length_vector(EllipsoidParams(1, 1, 4));
  CHECK(std::abs(l.sphere[0] - kPerimeterOneHalf) <= 1e-12);
  CHECK(std::abs(l.sphere[1] - kPerimeterOneHalf) <= 1e-12);
  CHECK(std::abs(l.sphere[2] - 2 * kPi) <= 1e-12);
  CHECK(l.rp2()[2] == 0.5 * l.sphere[2]);

  const auto round = length_vector(EllipsoidParams::round());
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(round.sphere[i] - 2 * kPi) <= 1e-12);
    CHECK(std::abs(round.rp2()[i] - kPi) <= 1e-12);
  }
}

TEST_CASE("each axial length ignores its own coefficient") {
  const std::array<double, 3> base = {0.9, 1.2, 1.05};
  for (int i = 1; i <= 3; ++i) {
    const double ref = gamma_length(i, EllipsoidParams(base));
    for (double delta : {-0.5, 0.5}) {
      auto a = base;
      a[i - 1] += delta;
      CHECK(gamma_length(i, EllipsoidParams(a)) == ref);
    }
  }
}

TEST_CASE("length vector is symmetric in the complementary pair") {
  const auto l = length_vector(EllipsoidParams(0.8, 1.1, 1.4));
  const auto swapped = length_vector(EllipsoidParams(0.8, 1.4, 1.1));
  CHECK(std::abs(l.sphere[0] - swapped.sphere[0]) <= 1e-12);
  CHECK(std::abs(l.sphere[1] - swapped.sphere[2]) <= 1e-12);
  CHECK(std::abs(l.sphere[2] - swapped.sphere[1]) <= 1e-12);
}

TEST_CASE("jacobian at the round sphere") {
  const Eigen::Matrix3d j = jacobian_fd(EllipsoidParams::round());
  for (int i = 0; i < 3; ++i) CHECK(std::abs(j(i, i)) <= 1e-6);
  const double star = j(0, 1);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (r != c) CHECK(std::abs(j(r, c) - star) <= 1e-6);
    }
  }
  // Chain rule through a -> a^(-1/2) at a = 1 (mpmath oracle in tests/oracles).
  CHECK(std::abs(star - (-kPi / 2)) <= 1e-6);
  CHECK(std::abs(j.determinant() - 2 * star * star * star) <= 1e-5);
  CHECK(std::abs(j.determinant()) > 0.1 * std::abs(star * star * star));

  CHECK_THROWS_AS(jacobian_fd(EllipsoidParams::round(), 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(jacobian_fd(EllipsoidParams::round(), 1e-2), std::invalid_argument);
}

TEST_CASE("calibration hits the targets") {
  const auto zero = calibrate(0.0);
  CHECK(zero.iterations == 0);
  CHECK(zero.params.values() == EllipsoidParams::round().values());

  for (double mu : {1e-4, 1e-3, 1e-2, 5e-2}) {
    CAPTURE(mu);
    const Calibration c = calibrate(mu, 1e-10);
    const auto target = calibration_targets(mu);
    CHECK(c.residual <= 1e-8);
    CHECK(c.iterations <= 20);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(c.lengths.sphere[i] - target[i]) <= 1e-8);
      CHECK(std::abs(c.lengths.rp2()[i] - (kPi + i * mu)) <= 5e-9);
    }
    CHECK(c.lengths.sphere[0] < c.lengths.sphere[1]);
    CHECK(c.lengths.sphere[1] < c.lengths.sphere[2]);
  }
}

TEST_CASE("calibration preconditions") {
  CHECK_THROWS_AS(calibrate(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(calibrate(0.2), std::invalid_argument);
  CHECK_THROWS_AS(calibrate(0.01, 1e-14), std::invalid_argument);
  CHECK_THROWS_AS(calibrate(0.05, 1e-10, 1), NoConvergence);
}

TEST_CASE("geodesics on the round sphere close after 2 pi") {
  const EllipsoidParams round = EllipsoidParams::round();
  GeodesicState s;
  s.position = Vec3(1, 2, 2) / 3.0;
  s.velocity = Vec3(0, 1, -1).normalized();
  const auto report = geodesic_integrate(round, s, 4 * kPi);
  REQUIRE(report.returned);
  CHECK(std::abs(report.return_arc - 2 * kPi) <= 1e-6);
  CHECK(report.return_distance <= 1e-8);
}

TEST_CASE("axial geodesics of a calibrated ellipsoid match quadrature") {
  const auto c = calibrate(0.01);
  for (int i = 1; i <= 3; ++i) {
    GeodesicOptions o;
    o.keep_trajectory = true;
    const auto report = geodesic_integrate(c.params, axial_start(i, c.params), 8.0, o);
    REQUIRE(report.returned);
    CHECK(std::abs(report.return_arc - gamma_length(i, c.params)) <= 1e-6);
    CHECK(report.return_velocity_mismatch <= 1e-8);
    CHECK(report.max_constraint_drift <= 1e-9);
    CHECK(report.max_speed_drift <= 1e-9);
    REQUIRE(report.trajectory.size() > 2);
    for (const auto& st : report.trajectory) {
      CHECK(std::abs(c.params.constraint(st.position)) <= 1e-9);
      CHECK(std::abs(st.velocity.norm() - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("geodesic preconditions") {
  const EllipsoidParams a(1, 2, 3);
  GeodesicState bad;
  bad.position = Vec3(1, 0, 0);
  bad.velocity = Vec3(1, 0, 0);
  CHECK_THROWS_AS(geodesic_integrate(a, bad, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(geodesic_integrate(a, axial_start(3, a), 0.0), std::invalid_argument);
}

}  // TEST_SUITE

}  // namespace
}  // namespace rp2w
