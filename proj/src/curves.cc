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

#include "rp2w/curves.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include <boost/math/tools/roots.hpp>

#include "rp2w/icosphere.h"

namespace rp2w {
namespace {

constexpr double kMinTangentialGradient = 1e-8;
constexpr double kPairingTolerance = 1e-9;
// 2e6 cells per axis on [-1, 1] fit the 21-bit key fields.
constexpr double kPairingCell = 1e-6;

Vec3 arc_point(const Vec3& a, const Vec3& b, double t) {
  return ((1.0 - t) * a + t * b).normalized();
}

}  // namespace

TracedCurve trace_level_set(const LevelFunction& f, int resolution) {
  const Icosphere grid = build_icosphere(resolution);
  const auto nv = grid.vertices.size();
  const auto ne = grid.edges.size();

  std::vector<double> value(nv);
  for (std::size_t v = 0; v < nv; ++v) value[v] = evaluate(f, grid.vertices[v]);
  auto positive = [&](int v) { return value[v] >= 0.0; };

  // crossing_of[e] indexes `points`, or -1.
  std::vector<int> crossing_of(ne, -1);
  std::vector<Vec3> points;
  std::vector<int> point_edge;
  boost::math::tools::eps_tolerance<double> tol(
      std::numeric_limits<double>::digits - 3);

  for (std::size_t e = 0; e < ne; ++e) {
    const Vec3& a = grid.vertices[grid.edges[e][0]];
    const Vec3& b = grid.vertices[grid.edges[e][1]];
    const bool pa = positive(grid.edges[e][0]);
    const bool pb = positive(grid.edges[e][1]);
    if (pa == pb) {
      if ((evaluate(f, arc_point(a, b, 0.5)) >= 0.0) != pa) {
        throw NearSingular("sign change hidden inside a grid edge at "
                           "resolution " + std::to_string(resolution));
      }
      continue;
    }
    auto g = [&](double t) { return evaluate(f, arc_point(a, b, t)); };
    std::uintmax_t max_iter = 200;
    auto [lo, hi] = boost::math::tools::toms748_solve(
        g, 0.0, 1.0, value[grid.edges[e][0]], value[grid.edges[e][1]], tol,
        max_iter);
    const Vec3 x = arc_point(a, b, 0.5 * (lo + hi));
    const Vec3 grad = ambient_gradient(f, x);
    if ((grad - grad.dot(x) * x).norm() < kMinTangentialGradient) {
      throw NearSingular("vanishing tangential gradient on the level set");
    }
    crossing_of[e] = static_cast<int>(points.size());
    points.push_back(x);
    point_edge.push_back(static_cast<int>(e));
  }

  // Each crossing edge borders two triangles; each crossed triangle links its
  // two crossing edges.
  const auto np = points.size();
  std::vector<std::array<int, 2>> link(np, {-1, -1});
  for (std::size_t face = 0; face < grid.faces.size(); ++face) {
    int found[3];
    int k = 0;
    for (int e : grid.face_edges[face]) {
      if (crossing_of[e] >= 0) found[k++] = crossing_of[e];
    }
    if (k == 0) continue;
    if (k != 2) throw NearSingular("ambiguous grid triangle");
    for (int s = 0; s < 2; ++s) {
      auto& slots = link[found[s]];
      (slots[0] < 0 ? slots[0] : slots[1]) = found[1 - s];
    }
  }

  TracedCurve out;
  out.resolution = resolution;
  std::vector<int> component_of(np, -1);
  for (std::size_t start = 0; start < np; ++start) {
    if (component_of[start] >= 0) continue;
    const int id = static_cast<int>(out.components.size());
    std::vector<Vec3> polyline;
    double length = 0.0;
    int prev = -1;
    int cur = static_cast<int>(start);
    do {
      component_of[cur] = id;
      polyline.push_back(points[cur]);
      const int next = link[cur][0] != prev ? link[cur][0] : link[cur][1];
      if (next < 0) throw NearSingular("open polyline in level-set tracing");
      length += great_arc(points[cur], points[next]);
      prev = cur;
      cur = next;
    } while (cur != static_cast<int>(start));
    out.components.push_back(std::move(polyline));
    out.component_lengths.push_back(length);
    out.total_length_sphere += length;
  }

  // Antipodal pairing: the crossing on the mirrored grid edge, or, when the
  // level set runs through grid vertices, the crossing found at -x.
  std::unordered_map<std::int64_t, std::vector<int>> cells;
  auto cell_key = [](const Vec3& x, int dx, int dy, int dz) {
    auto q = [](double c, int off) {
      return static_cast<std::int64_t>(std::floor(c / kPairingCell)) + off +
             (1 << 20);
    };
    return (q(x.x(), dx) << 42) | (q(x.y(), dy) << 21) | q(x.z(), dz);
  };
  for (std::size_t p = 0; p < np; ++p) {
    cells[cell_key(points[p], 0, 0, 0)].push_back(static_cast<int>(p));
  }
  auto find_point = [&](const Vec3& x) {
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dz = -1; dz <= 1; ++dz) {
          auto it = cells.find(cell_key(x, dx, dy, dz));
          if (it == cells.end()) continue;
          for (int p : it->second) {
            if ((points[p] - x).norm() <= kPairingTolerance) return p;
          }
        }
      }
    }
    return -1;
  };

  const auto nc = out.components.size();
  out.antipodal_partner.assign(nc, -2);  // -2: not yet seen
  for (std::size_t p = 0; p < np; ++p) {
    const auto& edge = grid.edges[point_edge[p]];
    const int mirror_edge =
        grid.find_edge(grid.antipode[edge[0]], grid.antipode[edge[1]]);
    int mirror = mirror_edge >= 0 ? crossing_of[mirror_edge] : -1;
    if (mirror < 0) mirror = find_point(-points[p]);
    int& partner = out.antipodal_partner[component_of[p]];
    const int candidate = mirror >= 0 ? component_of[mirror] : -1;
    if (partner == -2) {
      partner = candidate;
    } else if (partner != candidate) {
      partner = -1;
    }
    if (mirror >= 0) {
      out.antipodal_mismatch = std::max(out.antipodal_mismatch,
                                        (points[p] + points[mirror]).norm());
    }
  }
  for (int& partner : out.antipodal_partner) {
    if (partner == -2) partner = -1;
  }
  return out;
}

double rp2_mass_from_trace(const TracedCurve& curve) {
  for (std::size_t c = 0; c < curve.antipodal_partner.size(); ++c) {
    const int partner = curve.antipodal_partner[c];
    if (partner < 0 ||
        curve.antipodal_partner[partner] != static_cast<int>(c)) {
      throw std::domain_error("traced curve is not antipodally symmetric");
    }
  }
  return 0.5 * curve.total_length_sphere;
}

}  // namespace rp2w
