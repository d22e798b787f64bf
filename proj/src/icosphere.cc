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

#include "rp2w/icosphere.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace rp2w {
namespace {

std::int64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

void base_icosahedron(std::vector<Vec3>& vertices,
                      std::vector<std::array<int, 3>>& faces) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const Vec3 raw[12] = {
      {-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  for (const Vec3& v : raw) vertices.push_back(v / v.norm());
  faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
           {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
           {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
           {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
}

}  // namespace

int Icosphere::find_edge(int a, int b) const {
  const std::int64_t key = edge_key(a, b);
  auto it = std::lower_bound(edge_keys_.begin(), edge_keys_.end(), key);
  if (it == edge_keys_.end() || *it != key) return -1;
  return edge_order_[it - edge_keys_.begin()];
}

Icosphere build_icosphere(int subdivisions) {
  if (subdivisions < 0 || subdivisions > 9) {
    throw std::invalid_argument("icosphere subdivisions must lie in [0, 9]");
  }
  Icosphere g;
  base_icosahedron(g.vertices, g.faces);

  for (int level = 0; level < subdivisions; ++level) {
    std::unordered_map<std::int64_t, int> midpoint;
    auto mid = [&](int a, int b) {
      auto [it, inserted] = midpoint.try_emplace(edge_key(a, b), 0);
      if (inserted) {
        // (a + b) / |a + b| is exactly odd under negation of both inputs.
        const Vec3 m = g.vertices[a] + g.vertices[b];
        g.vertices.push_back(m / m.norm());
        it->second = static_cast<int>(g.vertices.size()) - 1;
      }
      return it->second;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(g.faces.size() * 4);
    for (const auto& [a, b, c] : g.faces) {
      const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
      next.push_back({a, ab, ca});
      next.push_back({b, bc, ab});
      next.push_back({c, ca, bc});
      next.push_back({ab, bc, ca});
    }
    g.faces = std::move(next);
  }

  std::unordered_map<std::int64_t, int> edge_id;
  edge_id.reserve(g.faces.size() * 2);
  g.face_edges.resize(g.faces.size());
  for (std::size_t f = 0; f < g.faces.size(); ++f) {
    for (int k = 0; k < 3; ++k) {
      const int a = g.faces[f][(k + 1) % 3];
      const int b = g.faces[f][(k + 2) % 3];
      auto [it, inserted] = edge_id.try_emplace(
          edge_key(a, b), static_cast<int>(g.edges.size()));
      if (inserted) {
        g.edges.push_back({std::min(a, b), std::max(a, b)});
        g.edge_faces.push_back({static_cast<int>(f), -1});
      } else {
        g.edge_faces[it->second][1] = static_cast<int>(f);
      }
      g.face_edges[f][k] = it->second;
    }
  }
  g.edge_keys_.reserve(g.edges.size());
  g.edge_order_.resize(g.edges.size());
  std::iota(g.edge_order_.begin(), g.edge_order_.end(), 0);
  std::sort(g.edge_order_.begin(), g.edge_order_.end(), [&](int x, int y) {
    return edge_key(g.edges[x][0], g.edges[x][1]) <
           edge_key(g.edges[y][0], g.edges[y][1]);
  });
  for (int e : g.edge_order_) {
    g.edge_keys_.push_back(edge_key(g.edges[e][0], g.edges[e][1]));
  }

  std::map<std::array<double, 3>, int> by_position;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const Vec3& p = g.vertices[v];
    by_position.emplace(std::array<double, 3>{p.x(), p.y(), p.z()},
                        static_cast<int>(v));
  }
  g.antipode.resize(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const Vec3& p = g.vertices[v];
    auto it = by_position.find({-p.x(), -p.y(), -p.z()});
    if (it == by_position.end()) {
      throw std::logic_error("icosphere vertex set is not antipodal");
    }
    g.antipode[v] = it->second;
  }
  return g;
}

}  // namespace rp2w
