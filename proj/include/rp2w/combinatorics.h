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

// Exact integer arithmetic for the width spectrum of the round projective
// plane and for the even-multiplicity length spectrum of the perturbed
// ellipsoid metrics.

#ifndef RP2W_COMBINATORICS_H_
#define RP2W_COMBINATORICS_H_

#include <cstdint>
#include <limits>
#include <vector>

namespace rp2w {

// Largest p for which 1 + 8p fits in 64 bits.
inline constexpr std::int64_t kMaxWidthIndex =
    (std::numeric_limits<std::int64_t>::max() - 1) / 8;

// Index p >= 1 of a p-width.
class WidthIndex {
 public:
  // Throws std::invalid_argument unless 1 <= p <= kMaxWidthIndex.
  explicit WidthIndex(std::int64_t p);
  std::int64_t value() const { return p_; }

 private:
  std::int64_t p_;
};

// Largest s with s * s <= n. n >= 0.
std::int64_t isqrt(std::int64_t n);

// Dimension (d+1)(2d+1) of the space of antipodally invariant polynomials
// f(x,y) + z g(x,y) with deg f <= 2d even and deg g <= 2d-1 odd.
std::int64_t sweepout_dimension(std::int64_t d);

// The level d+1 such that sweepout_dimension(d) <= p < sweepout_dimension(d+1),
// found by walking the intervals.
std::int64_t width_level_by_interval(WidthIndex p);

// floor((1 + sqrt(1 + 8p)) / 4) with an integer square root, so the floor is
// exact at the interval boundaries where 1 + 8p is a perfect square.
std::int64_t width_level_closed_form(WidthIndex p);

// 2 pi * width_level_closed_form(p).
double standard_width(WidthIndex p);

// One element of the length spectrum: multiplicities of the three axial
// geodesics of lengths pi, pi + mu, pi + 2 mu.
struct SpectrumEntry {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;
  double mu = 0.0;

  int total() const { return n1 + n2 + n3; }
  int offset() const { return n2 + 2 * n3; }
  int parity() const { return total() % 2; }
  double value() const;
};

// Upper end 2 pi (d+1) + 1 of the spectrum window.
double spectrum_window(int d);

// Largest admissible mu for degree d; mu must lie strictly inside (0, this).
double max_spectrum_mu(int d);

// All distinct values of the even-total length spectrum inside
// (0, spectrum_window(d)], sorted increasingly. Each value is represented by
// one witness entry; values are deduplicated by the integer key
// (total, offset), which is injective on the window for admissible mu.
// Throws std::invalid_argument unless 0 < mu < max_spectrum_mu(d).
std::vector<SpectrumEntry> even_length_spectrum_entries(int d, double mu);

// The values of even_length_spectrum_entries.
std::vector<double> even_length_spectrum(int d, double mu);

// (d+1)(2d+5).
std::int64_t even_length_spectrum_size(std::int64_t d);

// The set {n2 + 2 n3 : n1 + n2 + n3 = total} of offsets reachable at a fixed
// total multiplicity, sorted. Brute force over all triples.
std::vector<int> reachable_offsets(int total);

}  // namespace rp2w

#endif  // RP2W_COMBINATORICS_H_
