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

// Explicit tracing of {P = 0} on the unit sphere, used as an independent
// length oracle for the Crofton estimator.

#ifndef RP2W_CURVES_H_
#define RP2W_CURVES_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "rp2w/poly.h"

namespace rp2w {

// The level set is singular or under-resolved at the requested grid
// resolution; perturb the coefficients or refine the grid.
class NearSingular : public std::runtime_error {
 public:
  explicit NearSingular(const std::string& what)
      : std::runtime_error("near-singular level set: " + what) {}
};

struct TracedCurve {
  int resolution = 0;
  // Closed polylines of unit vectors; the last vertex connects to the first.
  std::vector<std::vector<Vec3>> components;
  std::vector<double> component_lengths;
  double total_length_sphere = 0.0;
  // antipodal_partner[c] is the component equal to -components[c] (c itself
  // when self-antipodal), or -1 when no component matches.
  std::vector<int> antipodal_partner;
  // Largest |x + x'| over crossings x matched with their antipodal crossing.
  double antipodal_mismatch = 0.0;
};

// Marching triangles on build_icosphere(resolution): sign changes along grid
// edges are located by root finding on the edge great arc and linked through
// shared triangles. Lengths sum great-arc segments.
//
// Throws NearSingular when an edge hides a sign change at its midpoint, a
// triangle has other than 0 or 2 crossing edges, or the tangential gradient
// at a crossing is below 1e-8.
TracedCurve trace_level_set(const LevelFunction& f, int resolution = 6);

// total_length_sphere / 2. Throws std::domain_error if some component has no
// antipodal partner.
double rp2_mass_from_trace(const TracedCurve& curve);

}  // namespace rp2w

#endif  // RP2W_CURVES_H_
