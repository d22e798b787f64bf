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

#include "rp2w/combinatorics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace rp2w {

WidthIndex::WidthIndex(std::int64_t p) : p_(p) {
  if (p < 1 || p > kMaxWidthIndex) {
    throw std::invalid_argument("width index must lie in [1, " +
                                std::to_string(kMaxWidthIndex) + "], got " +
                                std::to_string(p));
  }
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt of a negative number");
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  // Correct the double estimate with division so nothing overflows.
  while (s > 0 && s > n / s) --s;
  while (s + 1 <= n / (s + 1)) ++s;
  return s;
}

std::int64_t sweepout_dimension(std::int64_t d) {
  if (d < 0) throw std::invalid_argument("degree parameter must be >= 0");
  return (d + 1) * (2 * d + 1);
}

std::int64_t width_level_by_interval(WidthIndex p) {
  std::int64_t d = 0;
  while (sweepout_dimension(d + 1) <= p.value()) ++d;
  return d + 1;
}

std::int64_t width_level_closed_form(WidthIndex p) {
  return (1 + isqrt(1 + 8 * p.value())) / 4;
}

double standard_width(WidthIndex p) {
  return 2.0 * std::numbers::pi *
         static_cast<double>(width_level_closed_form(p));
}

double SpectrumEntry::value() const {
  return total() * std::numbers::pi + mu * offset();
}

double spectrum_window(int d) { return 2.0 * std::numbers::pi * (d + 1) + 1.0; }

double max_spectrum_mu(int d) { return 1.0 / (2.0 * (d + 1)); }

std::vector<SpectrumEntry> even_length_spectrum_entries(int d, double mu) {
  if (d < 0) throw std::invalid_argument("degree parameter must be >= 0");
  if (!(mu > 0.0 && mu < max_spectrum_mu(d))) {
    throw std::invalid_argument("mu must lie in (0, 1/(2(d+1)))");
  }
  const double window = spectrum_window(d);
  // Values exactly on the window edge (e.g. mu = 1/(4(d+1)) at the top
  // offset) must not be lost to rounding.
  const double edge = window * (1.0 + 1e-12);
  // Every term is at least pi, so no total beyond window / pi can fit.
  const int max_total = static_cast<int>(std::floor(window / std::numbers::pi));

  std::set<std::pair<int, int>> seen;
  std::vector<SpectrumEntry> out;
  for (int total = 2; total <= max_total; total += 2) {
    for (int n3 = 0; n3 <= total; ++n3) {
      for (int n2 = 0; n2 + n3 <= total; ++n2) {
        SpectrumEntry e{total - n2 - n3, n2, n3, mu};
        if (e.value() > edge) continue;
        if (seen.emplace(e.total(), e.offset()).second) out.push_back(e);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              return a.value() < b.value();
            });
  return out;
}

std::vector<double> even_length_spectrum(int d, double mu) {
  std::vector<double> values;
  for (const auto& e : even_length_spectrum_entries(d, mu)) {
    values.push_back(e.value());
  }
  return values;
}

std::int64_t even_length_spectrum_size(std::int64_t d) {
  if (d < 0) throw std::invalid_argument("degree parameter must be >= 0");
  return (d + 1) * (2 * d + 5);
}

std::vector<int> reachable_offsets(int total) {
  std::set<int> offsets;
  for (int n3 = 0; n3 <= total; ++n3) {
    for (int n2 = 0; n2 + n3 <= total; ++n2) offsets.insert(n2 + 2 * n3);
  }
  return {offsets.begin(), offsets.end()};
}

}  // namespace rp2w
