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

#ifndef RP2W_ICOSPHERE_H_
#define RP2W_ICOSPHERE_H_

#include <array>
#include <cstdint>
#include <vector>

#include "rp2w/geometry.h"

namespace rp2w {

// Geodesic grid from repeated midpoint subdivision of the icosahedron:
// 20 * 4^k triangles. The vertex set is closed under negation, exactly in
// floating point.
struct Icosphere {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  // Edges as (lo, hi) vertex pairs.
  std::vector<std::array<int, 2>> edges;
  // face_edges[f][k] is the edge opposite vertex k of face f.
  std::vector<std::array<int, 3>> face_edges;
  std::vector<std::array<int, 2>> edge_faces;
  // antipode[v] is the vertex at -vertices[v].
  std::vector<int> antipode;

  // Edge id of the edge between two vertices, or -1.
  int find_edge(int a, int b) const;

 private:
  friend Icosphere build_icosphere(int subdivisions);
  std::vector<std::int64_t> edge_keys_;  // sorted, parallel to edge_order_
  std::vector<int> edge_order_;
};

// Throws std::invalid_argument unless 0 <= subdivisions <= 9.
Icosphere build_icosphere(int subdivisions);

}  // namespace rp2w

#endif  // RP2W_ICOSPHERE_H_
