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

#ifndef RP2W_GEOMETRY_H_
#define RP2W_GEOMETRY_H_

#include <cmath>
#include <cstdint>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace rp2w {

using Vec3 = Eigen::Vector3d;

// Angle between two unit vectors, stable for both small and near-pi angles.
inline double great_arc(const Vec3& a, const Vec3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

// The great circle xi^perp on the unit sphere, with a deterministic
// orthonormal frame {u, v, xi}. u is the coordinate axis along which xi has
// the smallest absolute component (ties go to the lower index),
// Gram-Schmidt-orthogonalised against xi; v = xi x u.
class GreatCircle {
 public:
  // Throws std::invalid_argument unless |normal| = 1 within 1e-12.
  explicit GreatCircle(const Vec3& normal, std::uint64_t sample_id = 0);

  const Vec3& normal() const { return normal_; }
  const Vec3& u() const { return u_; }
  const Vec3& v() const { return v_; }

  // Identity of the sampler draw that produced this circle; 0 when the
  // circle was given explicitly.
  std::uint64_t sample_id() const { return sample_id_; }

  // Arc-length parametrisation u cos(theta) + v sin(theta).
  Vec3 point(double theta) const {
    return u_ * std::cos(theta) + v_ * std::sin(theta);
  }

 private:
  Vec3 normal_;
  Vec3 u_;
  Vec3 v_;
  std::uint64_t sample_id_;
};

}  // namespace rp2w

#endif  // RP2W_GEOMETRY_H_
