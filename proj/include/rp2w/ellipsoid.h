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

// Axial geodesics of the ellipsoids a1 x1^2 + a2 x2^2 + a3 x3^2 = 1, the
// calibration of (a1, a2, a3) to prescribed axial lengths, and a constrained
// geodesic integrator used to cross-check those lengths.
//
// Quantities on RP^2 are halves of the corresponding quantities on the
// ellipsoid; no intrinsic chart of the quotient is built.

#ifndef RP2W_ELLIPSOID_H_
#define RP2W_ELLIPSOID_H_

#include <array>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "rp2w/geometry.h"

namespace rp2w {

class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DriftBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficients of a1 x1^2 + a2 x2^2 + a3 x3^2 = 1.
class EllipsoidParams {
 public:
  // Throws std::invalid_argument unless every coefficient is finite and > 0.
  EllipsoidParams(double a1, double a2, double a3);
  explicit EllipsoidParams(const std::array<double, 3>& a)
      : EllipsoidParams(a[0], a[1], a[2]) {}

  static EllipsoidParams round() { return {1.0, 1.0, 1.0}; }

  // 1-based, matching the axis numbering of the geodesics.
  double operator()(int i) const { return a_.at(i - 1); }
  const std::array<double, 3>& values() const { return a_; }

  // Residual of the defining equation at x.
  double constraint(const Vec3& x) const;
  // Half-gradient (a1 x1, a2 x2, a3 x3) of the defining function.
  Vec3 half_normal(const Vec3& x) const;

 private:
  std::array<double, 3> a_;
};

// Perimeter of the ellipse with semi-axes p and q: adaptive Gauss-Kronrod on
// the integral of sqrt(p^2 sin^2 t + q^2 cos^2 t) over [0, 2 pi].
double ellipse_perimeter(double p, double q, double tol = 1e-12);

// Length of the planar geodesic E(a) n {x_i = 0}: the ellipse with semi-axes
// 1/sqrt(a_j), 1/sqrt(a_k), {j, k} = {1, 2, 3} \ {i}, j < k. Independent of
// a_i by construction.
double gamma_length(int i, const EllipsoidParams& a);

struct LengthVector {
  std::array<double, 3> sphere{};

  std::array<double, 3> rp2() const {
    return {0.5 * sphere[0], 0.5 * sphere[1], 0.5 * sphere[2]};
  }
};

LengthVector length_vector(const EllipsoidParams& a);

// Central differences of length_vector: entry (i, j) is the derivative of
// length i in a_j. Throws std::invalid_argument unless h lies in [1e-7, 1e-3].
Eigen::Matrix3d jacobian_fd(const EllipsoidParams& a, double h = 1e-5);

// (2 pi, 2 pi + 2 mu, 2 pi + 4 mu).
std::array<double, 3> calibration_targets(double mu);

struct Calibration {
  double mu = 0.0;
  EllipsoidParams params = EllipsoidParams::round();
  LengthVector lengths;
  double residual = 0.0;  // infinity norm
  int iterations = 0;
};

// Damped Newton from (1, 1, 1) on length_vector(a) - calibration_targets(mu),
// with the Jacobian from jacobian_fd. Throws std::invalid_argument unless
// 0 <= mu <= 0.1 and tol >= 1e-12, and NoConvergence after 50 iterations.
Calibration calibrate(double mu, double tol = 1e-10, int max_iterations = 50);

struct GeodesicState {
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  double arc_length = 0.0;
};

// Unit-speed start on gamma_i: at the end of the first remaining axis, moving
// along the second.
GeodesicState axial_start(int i, const EllipsoidParams& a);

struct GeodesicOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
  double initial_step = 1e-3;
  // Allowed constraint plus speed drift before projection, per unit arc.
  double drift_budget = 1e-9;
  // Distance from the start that must be exceeded before returns count.
  double departure = 0.5;
  bool stop_at_first_return = true;
  // Record every accepted state in the report.
  bool keep_trajectory = false;
};

struct ClosureReport {
  // A local minimum of |x(s) - x(0)| was found after departure.
  bool returned = false;
  double return_distance = 0.0;
  double return_velocity_mismatch = 0.0;
  double return_arc = 0.0;
  // Closest approach over the whole run after departure.
  double closest_distance = 0.0;
  double closest_arc = 0.0;
  double arc_integrated = 0.0;
  double max_constraint_drift = 0.0;
  double max_speed_drift = 0.0;
  std::vector<GeodesicState> trajectory;
};

// Integrates x'' = -(sum a_i v_i^2 / sum a_i^2 x_i^2) (a_i x_i) in arc length
// with an adaptive Runge-Kutta-Fehlberg 7(8) stepper, projecting back onto
// the ellipsoid and onto unit tangent speed after every step. Returns are
// located to step-interpolation accuracy by re-stepping from the last state.
//
// Throws std::invalid_argument if s0 violates the state invariants (1e-9),
// DriftBudgetExceeded when the accumulated pre-projection drift exceeds
// drift_budget * (1 + arc).
ClosureReport geodesic_integrate(const EllipsoidParams& a,
                                 const GeodesicState& s0, double max_arc,
                                 const GeodesicOptions& options = {});

}  // namespace rp2w

#endif  // RP2W_ELLIPSOID_H_
