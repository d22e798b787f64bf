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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/LU>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

namespace rp2w {
namespace {

constexpr double kStateTolerance = 1e-9;

std::array<int, 2> complementary_axes(int i) {
  switch (i) {
    case 1: return {1, 2};
    case 2: return {0, 2};
    case 3: return {0, 1};
  }
  throw std::invalid_argument("geodesic index must be 1, 2 or 3");
}

double inf_norm(const std::array<double, 3>& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

std::array<double, 3> residual(const EllipsoidParams& a,
                               const std::array<double, 3>& target) {
  const LengthVector l = length_vector(a);
  return {l.sphere[0] - target[0], l.sphere[1] - target[1],
          l.sphere[2] - target[2]};
}

using OdeState = std::array<double, 6>;

Vec3 position_of(const OdeState& y) { return {y[0], y[1], y[2]}; }
Vec3 velocity_of(const OdeState& y) { return {y[3], y[4], y[5]}; }

OdeState pack(const Vec3& x, const Vec3& v) {
  return {x.x(), x.y(), x.z(), v.x(), v.y(), v.z()};
}

}  // namespace

EllipsoidParams::EllipsoidParams(double a1, double a2, double a3)
    : a_{a1, a2, a3} {
  for (double v : a_) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw std::invalid_argument("ellipsoid coefficients must be positive");
    }
  }
}

double EllipsoidParams::constraint(const Vec3& x) const {
  return a_[0] * x.x() * x.x() + a_[1] * x.y() * x.y() + a_[2] * x.z() * x.z() -
         1.0;
}

Vec3 EllipsoidParams::half_normal(const Vec3& x) const {
  return {a_[0] * x.x(), a_[1] * x.y(), a_[2] * x.z()};
}

double ellipse_perimeter(double p, double q, double tol) {
  if (!(p > 0.0 && q > 0.0)) {
    throw std::invalid_argument("ellipse semi-axes must be positive");
  }
  auto speed = [p, q](double t) {
    const double s = std::sin(t), c = std::cos(t);
    return std::sqrt(p * p * s * s + q * q * c * c);
  };
  // Gauss-Kronrod's tolerance is relative to the L1 norm of the integrand,
  // which is the perimeter itself (at most 2 pi max(p, q)).
  const double rel = tol / (2.0 * std::numbers::pi * std::max(p, q));
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      speed, 0.0, 2.0 * std::numbers::pi, 15, rel);
}

double gamma_length(int i, const EllipsoidParams& a) {
  const auto [j, k] = complementary_axes(i);
  return ellipse_perimeter(1.0 / std::sqrt(a.values()[j]),
                           1.0 / std::sqrt(a.values()[k]));
}

LengthVector length_vector(const EllipsoidParams& a) {
  return {{gamma_length(1, a), gamma_length(2, a), gamma_length(3, a)}};
}

Eigen::Matrix3d jacobian_fd(const EllipsoidParams& a, double h) {
  if (!(h >= 1e-7 && h <= 1e-3)) {
    throw std::invalid_argument("finite-difference step must lie in [1e-7, 1e-3]");
  }
  Eigen::Matrix3d jac;
  for (int j = 0; j < 3; ++j) {
    auto plus = a.values();
    auto minus = a.values();
    plus[j] += h;
    minus[j] -= h;
    const LengthVector lp = length_vector(EllipsoidParams(plus));
    const LengthVector lm = length_vector(EllipsoidParams(minus));
    for (int i = 0; i < 3; ++i) {
      jac(i, j) = (lp.sphere[i] - lm.sphere[i]) / (2.0 * h);
    }
  }
  return jac;
}

std::array<double, 3> calibration_targets(double mu) {
  const double two_pi = 2.0 * std::numbers::pi;
  return {two_pi, two_pi + 2.0 * mu, two_pi + 4.0 * mu};
}

Calibration calibrate(double mu, double tol, int max_iterations) {
  if (!(mu >= 0.0 && mu <= 0.1)) {
    throw std::invalid_argument("mu must lie in [0, 0.1]");
  }
  if (!(tol >= 1e-12)) throw std::invalid_argument("tol must be >= 1e-12");

  const auto target = calibration_targets(mu);
  EllipsoidParams a = EllipsoidParams::round();
  auto r = residual(a, target);
  double norm = inf_norm(r);

  Calibration out;
  out.mu = mu;
  int it = 0;
  for (; norm > tol; ++it) {
    if (it == max_iterations) {
      throw NoConvergence("calibration did not converge for mu = " +
                          std::to_string(mu) + " (residual " +
                          std::to_string(norm) + ")");
    }
    const Eigen::Matrix3d jac = jacobian_fd(a);
    const Eigen::Vector3d step =
        -jac.fullPivLu().solve(Eigen::Vector3d(r[0], r[1], r[2]));

    bool accepted = false;
    for (double lambda = 1.0; lambda > 1e-6; lambda *= 0.5) {
      std::array<double, 3> trial;
      for (int i = 0; i < 3; ++i) trial[i] = a.values()[i] + lambda * step[i];
      if (std::any_of(trial.begin(), trial.end(),
                      [](double v) { return !(v > 0.0); })) {
        continue;
      }
      const EllipsoidParams candidate(trial);
      const auto r_trial = residual(candidate, target);
      if (inf_norm(r_trial) < norm) {
        a = candidate;
        r = r_trial;
        norm = inf_norm(r_trial);
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      throw NoConvergence("damped Newton step failed to reduce the residual");
    }
  }
  out.params = a;
  out.lengths = length_vector(a);
  out.residual = norm;
  out.iterations = it;
  return out;
}

GeodesicState axial_start(int i, const EllipsoidParams& a) {
  const auto [j, k] = complementary_axes(i);
  GeodesicState s;
  s.position[j] = 1.0 / std::sqrt(a.values()[j]);
  s.velocity[k] = 1.0;
  return s;
}

ClosureReport geodesic_integrate(const EllipsoidParams& a,
                                 const GeodesicState& s0, double max_arc,
                                 const GeodesicOptions& options) {
  namespace odeint = boost::numeric::odeint;

  const Vec3 x0 = s0.position;
  const Vec3 v0 = s0.velocity;
  {
    const Vec3 n = a.half_normal(x0).normalized();
    if (std::abs(a.constraint(x0)) > kStateTolerance ||
        std::abs(v0.dot(n)) > kStateTolerance ||
        std::abs(v0.norm() - 1.0) > kStateTolerance) {
      throw std::invalid_argument("initial state is not a unit tangent vector "
                                  "on the ellipsoid");
    }
  }
  if (!(max_arc > 0.0)) throw std::invalid_argument("max_arc must be > 0");

  // Geodesic equation of an implicit surface: the acceleration is normal,
  // with the magnitude that keeps the velocity tangent.
  auto system = [&a](const OdeState& y, OdeState& dy, double) {
    const Vec3 x = position_of(y);
    const Vec3 v = velocity_of(y);
    const Vec3 n = a.half_normal(x);
    const double curvature =
        (a(1) * v.x() * v.x() + a(2) * v.y() * v.y() + a(3) * v.z() * v.z()) /
        n.squaredNorm();
    dy = {v.x(), v.y(), v.z(), -curvature * n.x(), -curvature * n.y(),
          -curvature * n.z()};
  };
  // Half the derivative of |x - x0|^2; its - to + sign change marks a return.
  auto approach_rate = [&](const OdeState& y) {
    return (position_of(y) - x0).dot(velocity_of(y));
  };

  using Fehlberg = odeint::runge_kutta_fehlberg78<OdeState>;
  auto controlled =
      odeint::make_controlled(options.abs_tol, options.rel_tol, Fehlberg());
  Fehlberg single;

  ClosureReport report;
  report.closest_distance = std::numeric_limits<double>::infinity();
  OdeState y = pack(x0, v0);
  double s = 0.0;
  double h = options.initial_step;
  double drift = 0.0;
  bool departed = false;
  double rate_prev = approach_rate(y);
  if (options.keep_trajectory) report.trajectory.push_back({x0, v0, 0.0});

  while (s < max_arc) {
    const OdeState y_prev = y;
    const double s_prev = s;
    double dt = std::min(h, max_arc - s);
    int rejections = 0;
    while (controlled.try_step(system, y, s, dt) == odeint::fail) {
      if (++rejections > 200) {
        throw DriftBudgetExceeded("step size control failed at arc " +
                                  std::to_string(s));
      }
    }
    h = dt;

    // Project onto the ellipsoid and onto unit tangent speed.
    Vec3 x = position_of(y);
    Vec3 v = velocity_of(y);
    const double c_drift = std::abs(a.constraint(x));
    for (int k = 0; k < 2; ++k) {
      const Vec3 n = a.half_normal(x);
      x -= a.constraint(x) / (2.0 * n.squaredNorm()) * n;
    }
    const Vec3 n_hat = a.half_normal(x).normalized();
    const double s_drift =
        std::abs(v.norm() - 1.0) + std::abs(v.dot(n_hat));
    v = (v - v.dot(n_hat) * n_hat).normalized();
    y = pack(x, v);

    report.max_constraint_drift = std::max(report.max_constraint_drift, c_drift);
    report.max_speed_drift = std::max(report.max_speed_drift, s_drift);
    drift += c_drift + s_drift;
    if (drift > options.drift_budget * (1.0 + s)) {
      throw DriftBudgetExceeded("accumulated drift " + std::to_string(drift) +
                                " at arc " + std::to_string(s));
    }
    if (options.keep_trajectory) report.trajectory.push_back({x, v, s});

    if (!departed && (x - x0).norm() > options.departure) departed = true;
    const double rate = approach_rate(y);
    if (departed && rate_prev < 0.0 && rate >= 0.0) {
      auto state_at = [&](double tau) {
        OdeState out;
        single.do_step(system, y_prev, s_prev, out, tau);
        return out;
      };
      const double accepted = s - s_prev;
      double tau = accepted;
      const double rate_end = approach_rate(state_at(accepted));
      if (rate_end >= 0.0) {
        boost::math::tools::eps_tolerance<double> tol(
            std::numeric_limits<double>::digits - 4);
        std::uintmax_t max_iter = 200;
        auto [lo, hi] = boost::math::tools::toms748_solve(
            [&](double t) { return approach_rate(state_at(t)); }, 0.0,
            accepted, rate_prev, rate_end, tol, max_iter);
        tau = 0.5 * (lo + hi);
      }
      const OdeState at = state_at(tau);
      const double dist = (position_of(at) - x0).norm();
      if (!report.returned) {
        report.returned = true;
        report.return_distance = dist;
        report.return_velocity_mismatch = (velocity_of(at) - v0).norm();
        report.return_arc = s_prev + tau;
      }
      if (dist < report.closest_distance) {
        report.closest_distance = dist;
        report.closest_arc = s_prev + tau;
      }
      if (options.stop_at_first_return) break;
    }
    rate_prev = rate;
  }
  report.arc_integrated = s;
  return report;
}

}  // namespace rp2w
