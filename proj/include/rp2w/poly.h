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

// Antipodally invariant polynomials f(x,y) + z g(x,y) on the unit sphere and
// their restrictions to great circles.

#ifndef RP2W_POLY_H_
#define RP2W_POLY_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rp2w/geometry.h"

namespace rp2w {

// Largest supported degree parameter d (total degree 2d).
inline constexpr int kMaxDegreeParameter = 30;

// x^x_exp * y^y_exp.
struct Monomial {
  int x_exp = 0;
  int y_exp = 0;

  int degree() const { return x_exp + y_exp; }
  bool operator==(const Monomial&) const = default;
};

// Ordered monomial basis of the sweepout space for a degree parameter d.
//
// Even part: monomials of even degree <= 2d. Odd part: monomials of odd
// degree <= 2d - 1, each multiplied by z. Both parts are graded by degree and,
// within a degree, ordered by decreasing power of x, so even slot 0 is the
// constant 1 and even slot 1 is x^2. Coefficient vectors list the even slots
// first, then the odd ones.
class MonomialBasis {
 public:
  // Throws std::invalid_argument unless 1 <= d <= kMaxDegreeParameter.
  explicit MonomialBasis(int d);

  int degree_parameter() const { return d_; }
  const std::vector<Monomial>& even() const { return even_; }
  const std::vector<Monomial>& odd() const { return odd_; }
  std::size_t size() const { return even_.size() + odd_.size(); }

  // Human-readable name of a slot, e.g. "x^2*y" or "z*x".
  std::string label(std::size_t slot) const;

 private:
  int d_;
  std::vector<Monomial> even_;
  std::vector<Monomial> odd_;
};

// A member of the sweepout space: coefficients against MonomialBasis(d).
// Invariant under (x,y,z) -> (-x,-y,-z) by construction, and evaluation is
// bit-for-bit symmetric under negation of the point.
class SweepPolynomial {
 public:
  // Throws std::invalid_argument if coeffs.size() != MonomialBasis(d).size().
  SweepPolynomial(int d, std::vector<double> coeffs);

  int degree_parameter() const { return d_; }
  std::span<const double> coefficients() const { return coeffs_; }
  bool is_zero() const;

  double eval(const Vec3& q) const;
  Vec3 gradient(const Vec3& q) const;

  // Degree of the restriction to any great circle as a trig polynomial.
  int trig_degree() const { return 2 * d_; }

 private:
  int d_;
  std::size_t n_even_;
  std::vector<double> coeffs_;
};

// General polynomial of degree <= 2 in (x, y, z). Test-only: used to check
// the length estimators against curves with known length (great circles,
// latitude circles). Not antipodally invariant in general, and never accepted
// by the sweepout APIs.
class AmbientQuadratic {
 public:
  // Coefficient order: 1, x, y, z, x^2, xy, xz, y^2, yz, z^2.
  using Coefficients = std::array<double, 10>;

  explicit AmbientQuadratic(const Coefficients& c) : c_(c) {}

  // The linear form n . q, whose zero set is the great circle n^perp.
  static AmbientQuadratic linear(const Vec3& n);
  // z - cos(colatitude): a latitude circle of length 2 pi sin(colatitude).
  static AmbientQuadratic latitude(double colatitude);

  const Coefficients& coefficients() const { return c_; }
  double eval(const Vec3& q) const;
  Vec3 gradient(const Vec3& q) const;
  int trig_degree() const;

 private:
  Coefficients c_;
};

using LevelFunction = std::variant<SweepPolynomial, AmbientQuadratic>;

double evaluate(const LevelFunction& f, const Vec3& q);
Vec3 ambient_gradient(const LevelFunction& f, const Vec3& q);
int trig_degree(const LevelFunction& f);

// theta -> f(u cos(theta) + v sin(theta)) on a great circle. Non-owning: the
// level function must outlive the restriction.
class CircleRestriction {
 public:
  CircleRestriction(const LevelFunction& f, const GreatCircle& circle)
      : f_(&f), circle_(circle) {}

  double operator()(double theta) const {
    return evaluate(*f_, circle_.point(theta));
  }
  // Value at the circle point with the given cos and sin of its angle.
  double at(double cos_theta, double sin_theta) const {
    return evaluate(*f_, circle_.u() * cos_theta + circle_.v() * sin_theta);
  }
  const GreatCircle& circle() const { return circle_; }
  int trig_degree() const { return rp2w::trig_degree(*f_); }

 private:
  const LevelFunction* f_;
  GreatCircle circle_;
};

// Coefficient form a_0 + sum_m (a_m cos(m theta) + b_m sin(m theta)) of a
// restriction; sin_coeffs[0] is always 0.
struct TrigSeries {
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;

  int degree() const { return static_cast<int>(cos_coeffs.size()) - 1; }
  double operator()(double theta) const;
};

// Exact (up to rounding) discrete Fourier transform from 2 * degree + 1
// equispaced values. `degree` must bound the true trig degree; 0 selects
// r.trig_degree().
TrigSeries fourier_coefficients(const CircleRestriction& r, int degree = 0);

// Throws std::invalid_argument unless |xi| = 1 within 1e-12.
CircleRestriction restrict_to_circle(const LevelFunction& f, const Vec3& xi);

enum class TangencyPolicy {
  // A tangency makes the whole count Degenerate; the caller redraws xi.
  kRetry,
  // Tangential touching contributes no crossings.
  kCountAsZero,
};

struct RootCount {
  int crossings = 0;
  // Identically-zero restriction, or a tangency under TangencyPolicy::kRetry.
  bool degenerate = false;
};

// 64 * ceil(trig_degree / 2) + 64.
int default_circle_samples(int trig_degree);

// Transverse sign changes of the restriction over [0, 2 pi).
//
// The circle is sampled at `samples` equispaced angles (0 selects
// default_circle_samples). Every sampled sign change is one crossing. Sampled
// local minima of |r| that come close to zero are minimised to expose pairs of
// crossings hidden inside one cell; a minimum within 1e-9 * max|r| of zero is
// a tangency and is handled per `policy`.
RootCount count_circle_roots(const CircleRestriction& r,
                             TangencyPolicy policy = TangencyPolicy::kRetry,
                             int samples = 0);

struct CircleRoots {
  bool degenerate = false;
  // Crossing angles in [0, 2 pi), increasing, refined to ~1e-14.
  std::vector<double> angles;
};

// As count_circle_roots, but also locates every crossing.
CircleRoots locate_circle_roots(const CircleRestriction& r,
                                TangencyPolicy policy = TangencyPolicy::kRetry,
                                int samples = 0);

}  // namespace rp2w

#endif  // RP2W_POLY_H_
