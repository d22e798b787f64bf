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

// Deterministic random streams and point samplers on spheres.
//
// Every sample owns a stream seeded from (seed, index, salt), so any subset
// of samples can be regenerated, and parallel and serial loops agree.

#ifndef RP2W_SPHERE_SAMPLING_H_
#define RP2W_SPHERE_SAMPLING_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rp2w/geometry.h"

namespace rp2w {

// splitmix64 finaliser over the three words.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index,
                          std::uint64_t salt = 0);

// SplitMix64 stream with portable conversions to uniform and normal deviates
// (the std:: distributions are implementation-defined). Cheap to seed, which
// matters with one stream per sample.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0)
      : state_(stream_seed(seed, index, salt)) {}

  std::uint64_t next();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Standard normal (Box-Muller).
  double normal();

 private:
  std::uint64_t state_;
};

// Uniform on S^2.
Vec3 uniform_sphere_point(SampleStream& stream);

// Uniform on the unit sphere of R^dim.
std::vector<double> uniform_unit_vector(SampleStream& stream, std::size_t dim);

// Point i of the n-point Fibonacci lattice on S^2.
Vec3 fibonacci_sphere_point(std::size_t i, std::size_t n);

}  // namespace rp2w

#endif  // RP2W_SPHERE_SAMPLING_H_
