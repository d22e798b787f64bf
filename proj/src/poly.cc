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

#include "rp2w/poly.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

namespace rp2w {
namespace {

constexpr double kUnitTolerance = 1e-12;
constexpr double kZeroRestriction = 1e-12;
constexpr double kTangencyRelTol = 1e-9;

// Bernstein: a trig polynomial of degree n with sup norm S has |r''| <= n^2 S,
// so the smallest sampled |r| near a true minimum overshoots it by at most
// n^2 S h^2 / 8. At the default density n h < pi / 16, i.e. under 0.005 S.
// Sampled minima above this fraction of S cannot hide a zero.
constexpr double kDipThreshold = 0.05;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <typename Fn>
void for_each_monomial(int lowest_degree, int top_degree, Fn&& fn) {
  for (int k = lowest_degree; k <= top_degree; k += 2) {
    for (int i = k; i >= 0; --i) fn(Monomial{i, k - i});
  }
}

using PowerTable = std::array<double, 2 * kMaxDegreeParameter + 1>;

void fill_powers(double base, int top, PowerTable& out) {
  out[0] = 1.0;
  for (int i = 1; i <= top; ++i) out[i] = out[i - 1] * base;
}

std::string monomial_label(const Monomial& m) {
  auto power = [](const char* var, int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
  };
  std::string x = power("x", m.x_exp);
  std::string y = power("y", m.y_exp);
  if (x.empty() && y.empty()) return "1";
  if (x.empty()) return y;
  if (y.empty()) return x;
  return x + "*" + y;
}

// (cos, sin) of 2 pi k / n, cached per thread for the densities in use.
const std::vector<std::array<double, 2>>& unit_circle_table(int n) {
  thread_local std::map<int, std::vector<std::array<double, 2>>> tables;
  auto [it, inserted] = tables.try_emplace(n);
  if (inserted) {
    it->second.resize(n);
    for (int k = 0; k < n; ++k) {
      const double t = kTwoPi * k / n;
      it->second[k] = {std::cos(t), std::sin(t)};
    }
  }
  return it->second;
}

struct Scan {
  bool degenerate = false;
  int crossings = 0;
  // Sign-change brackets in unwrapped angle (hi may exceed 2 pi).
  std::vector<std::pair<double, double>> brackets;
};

Scan scan_restriction(const CircleRestriction& r, TangencyPolicy policy,
                      int samples, bool want_brackets) {
  const int n =
      samples > 0 ? samples : default_circle_samples(r.trig_degree());
  const double h = kTwoPi / n;

  // Samples come from the coefficient form; refinement uses direct values.
  const TrigSeries series = fourier_coefficients(r);
  const int degree = series.degree();
  const auto& angles = unit_circle_table(n);
  std::vector<double> vals(n);
  double scale = 0.0;
  for (int k = 0; k < n; ++k) {
    double v = series.cos_coeffs[0];
    for (int m = 1; m <= degree; ++m) {
      const auto& cs = angles[(static_cast<std::int64_t>(m) * k) % n];
      v += series.cos_coeffs[m] * cs[0] + series.sin_coeffs[m] * cs[1];
    }
    vals[k] = v;
    scale = std::max(scale, std::abs(vals[k]));
  }
  Scan out;
  if (scale < kZeroRestriction) {
    out.degenerate = true;
    return out;
  }
  const double tol = kTangencyRelTol * scale;
  auto sign_of = [tol](double v) { return v > tol ? 1 : (v < -tol ? -1 : 0); };

  int start = 0;
  while (sign_of(vals[start]) == 0) ++start;  // exists since scale > tol

  bool tangent = false;
  int prev_step = 0;
  int prev_sign = sign_of(vals[start]);
  for (int step = 1; step <= n; ++step) {
    const int s = sign_of(vals[(start + step) % n]);
    if (s == 0) continue;
    if (s != prev_sign) {
      ++out.crossings;
      if (want_brackets) {
        out.brackets.emplace_back((start + prev_step) * h, (start + step) * h);
      }
    } else if (step - prev_step > 1) {
      // A run of near-zero samples between equal signs: touching, not crossing.
      tangent = true;
    }
    prev_step = step;
    prev_sign = s;
  }

  // Crossing pairs hidden between two samples of equal sign.
  for (int k = 0; k < n; ++k) {
    const int s = sign_of(vals[k]);
    if (s == 0) continue;
    const int km = (k + n - 1) % n;
    const int kp = (k + 1) % n;
    if (sign_of(vals[km]) != s || sign_of(vals[kp]) != s) continue;
    const double here = s * vals[k];
    if (!(here < s * vals[km] && here <= s * vals[kp])) continue;
    if (here > kDipThreshold * scale) continue;

    const double lo = (k - 1) * h;
    const double hi = (k + 1) * h;
    auto [theta_min, value_min] = boost::math::tools::brent_find_minima(
        [&](double t) { return s * r(t); }, lo, hi,
        std::numeric_limits<double>::digits / 2);
    if (value_min < -tol) {
      out.crossings += 2;
      if (want_brackets) {
        out.brackets.emplace_back(lo, theta_min);
        out.brackets.emplace_back(theta_min, hi);
      }
    } else if (value_min <= tol) {
      tangent = true;
    }
  }

  if (tangent && policy == TangencyPolicy::kRetry) out.degenerate = true;
  return out;
}

}  // namespace

GreatCircle::GreatCircle(const Vec3& normal, std::uint64_t sample_id)
    : normal_(normal), sample_id_(sample_id) {
  if (!normal.allFinite() || std::abs(normal.norm() - 1.0) > kUnitTolerance) {
    throw std::invalid_argument("great circle normal must be a unit vector");
  }
  int axis = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(normal[i]) < std::abs(normal[axis])) axis = i;
  }
  Vec3 e = Vec3::Unit(axis);
  u_ = (e - e.dot(normal_) * normal_).normalized();
  v_ = normal_.cross(u_);
}

MonomialBasis::MonomialBasis(int d) : d_(d) {
  if (d < 1 || d > kMaxDegreeParameter) {
    throw std::invalid_argument("degree parameter must lie in [1, " +
                                std::to_string(kMaxDegreeParameter) + "]");
  }
  for_each_monomial(0, 2 * d, [&](Monomial m) { even_.push_back(m); });
  for_each_monomial(1, 2 * d - 1, [&](Monomial m) { odd_.push_back(m); });
}

std::string MonomialBasis::label(std::size_t slot) const {
  if (slot < even_.size()) return monomial_label(even_[slot]);
  if (slot < size()) return "z*" + monomial_label(odd_[slot - even_.size()]);
  throw std::out_of_range("basis slot out of range");
}

SweepPolynomial::SweepPolynomial(int d, std::vector<double> coeffs)
    : d_(d), coeffs_(std::move(coeffs)) {
  const MonomialBasis basis(d);
  if (coeffs_.size() != basis.size()) {
    throw std::invalid_argument(
        "expected " + std::to_string(basis.size()) +
        " coefficients for d = " + std::to_string(d) + ", got " +
        std::to_string(coeffs_.size()));
  }
  n_even_ = basis.even().size();
}

bool SweepPolynomial::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](double c) { return c == 0.0; });
}

double SweepPolynomial::eval(const Vec3& q) const {
  const int top = 2 * d_;
  PowerTable xp;
  PowerTable yp;
  fill_powers(q.x(), top, xp);
  fill_powers(q.y(), top, yp);

  std::size_t slot = 0;
  double even = 0.0;
  for_each_monomial(0, top, [&](Monomial m) {
    even += coeffs_[slot++] * (xp[m.x_exp] * yp[m.y_exp]);
  });
  double odd = 0.0;
  for_each_monomial(1, top - 1, [&](Monomial m) {
    odd += coeffs_[slot++] * (xp[m.x_exp] * yp[m.y_exp]);
  });
  return even + q.z() * odd;
}

Vec3 SweepPolynomial::gradient(const Vec3& q) const {
  const int top = 2 * d_;
  PowerTable xp;
  PowerTable yp;
  fill_powers(q.x(), top, xp);
  fill_powers(q.y(), top, yp);

  std::size_t slot = 0;
  double even_dx = 0.0, even_dy = 0.0;
  for_each_monomial(0, top, [&](Monomial m) {
    const double c = coeffs_[slot++];
    if (m.x_exp > 0) even_dx += c * m.x_exp * xp[m.x_exp - 1] * yp[m.y_exp];
    if (m.y_exp > 0) even_dy += c * m.y_exp * xp[m.x_exp] * yp[m.y_exp - 1];
  });
  double odd = 0.0, odd_dx = 0.0, odd_dy = 0.0;
  for_each_monomial(1, top - 1, [&](Monomial m) {
    const double c = coeffs_[slot++];
    odd += c * xp[m.x_exp] * yp[m.y_exp];
    if (m.x_exp > 0) odd_dx += c * m.x_exp * xp[m.x_exp - 1] * yp[m.y_exp];
    if (m.y_exp > 0) odd_dy += c * m.y_exp * xp[m.x_exp] * yp[m.y_exp - 1];
  });
  return {even_dx + q.z() * odd_dx, even_dy + q.z() * odd_dy, odd};
}

AmbientQuadratic AmbientQuadratic::linear(const Vec3& n) {
  return AmbientQuadratic({0.0, n.x(), n.y(), n.z(), 0, 0, 0, 0, 0, 0});
}

AmbientQuadratic AmbientQuadratic::latitude(double colatitude) {
  return AmbientQuadratic({-std::cos(colatitude), 0, 0, 1.0, 0, 0, 0, 0, 0, 0});
}

double AmbientQuadratic::eval(const Vec3& q) const {
  const double x = q.x(), y = q.y(), z = q.z();
  return c_[0] + c_[1] * x + c_[2] * y + c_[3] * z + c_[4] * x * x +
         c_[5] * x * y + c_[6] * x * z + c_[7] * y * y + c_[8] * y * z +
         c_[9] * z * z;
}

Vec3 AmbientQuadratic::gradient(const Vec3& q) const {
  const double x = q.x(), y = q.y(), z = q.z();
  return {c_[1] + 2 * c_[4] * x + c_[5] * y + c_[6] * z,
          c_[2] + c_[5] * x + 2 * c_[7] * y + c_[8] * z,
          c_[3] + c_[6] * x + c_[8] * y + 2 * c_[9] * z};
}

int AmbientQuadratic::trig_degree() const {
  const bool quadratic = std::any_of(c_.begin() + 4, c_.end(),
                                     [](double c) { return c != 0.0; });
  return quadratic ? 2 : 1;
}

double evaluate(const LevelFunction& f, const Vec3& q) {
  return std::visit([&](const auto& g) { return g.eval(q); }, f);
}

Vec3 ambient_gradient(const LevelFunction& f, const Vec3& q) {
  return std::visit([&](const auto& g) { return g.gradient(q); }, f);
}

int trig_degree(const LevelFunction& f) {
  return std::visit([](const auto& g) { return g.trig_degree(); }, f);
}

CircleRestriction restrict_to_circle(const LevelFunction& f, const Vec3& xi) {
  return CircleRestriction(f, GreatCircle(xi));
}

double TrigSeries::operator()(double theta) const {
  double v = cos_coeffs.empty() ? 0.0 : cos_coeffs[0];
  for (int m = 1; m <= degree(); ++m) {
    v += cos_coeffs[m] * std::cos(m * theta) + sin_coeffs[m] * std::sin(m * theta);
  }
  return v;
}

TrigSeries fourier_coefficients(const CircleRestriction& r, int degree) {
  if (degree <= 0) degree = std::max(r.trig_degree(), 1);
  const int n = 2 * degree + 1;
  const auto& angles = unit_circle_table(n);
  std::vector<double> vals(n);
  for (int j = 0; j < n; ++j) vals[j] = r.at(angles[j][0], angles[j][1]);

  TrigSeries out;
  out.cos_coeffs.assign(degree + 1, 0.0);
  out.sin_coeffs.assign(degree + 1, 0.0);
  for (int j = 0; j < n; ++j) out.cos_coeffs[0] += vals[j];
  out.cos_coeffs[0] /= n;
  for (int m = 1; m <= degree; ++m) {
    double a = 0.0, b = 0.0;
    for (int j = 0; j < n; ++j) {
      const auto& cs = angles[(m * j) % n];
      a += vals[j] * cs[0];
      b += vals[j] * cs[1];
    }
    out.cos_coeffs[m] = 2.0 * a / n;
    out.sin_coeffs[m] = 2.0 * b / n;
  }
  return out;
}

int default_circle_samples(int trig_degree) {
  return 64 * ((std::max(trig_degree, 1) + 1) / 2) + 64;
}

RootCount count_circle_roots(const CircleRestriction& r, TangencyPolicy policy,
                             int samples) {
  const Scan scan = scan_restriction(r, policy, samples, false);
  return {scan.degenerate ? 0 : scan.crossings, scan.degenerate};
}

CircleRoots locate_circle_roots(const CircleRestriction& r,
                                TangencyPolicy policy, int samples) {
  const Scan scan = scan_restriction(r, policy, samples, true);
  CircleRoots out;
  out.degenerate = scan.degenerate;
  if (out.degenerate) return out;

  boost::math::tools::eps_tolerance<double> tol(
      std::numeric_limits<double>::digits - 3);
  for (const auto& [lo, hi] : scan.brackets) {
    std::uintmax_t max_iter = 200;
    auto [a, b] = boost::math::tools::toms748_solve(r, lo, hi, tol, max_iter);
    double theta = std::fmod(0.5 * (a + b), kTwoPi);
    if (theta < 0) theta += kTwoPi;
    out.angles.push_back(theta);
  }
  std::sort(out.angles.begin(), out.angles.end());
  return out;
}

}  // namespace rp2w
