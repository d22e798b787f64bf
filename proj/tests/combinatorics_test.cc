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

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"

namespace rp2w {
namespace {

constexpr double kPi = std::numbers::pi;

TEST_SUITE("combinatorics") {

TEST_CASE("width index rejects nonpositive values") {
  CHECK_THROWS_AS(WidthIndex(0), std::invalid_argument);
  CHECK_THROWS_AS(WidthIndex(-3), std::invalid_argument);
  CHECK_THROWS_AS(WidthIndex(kMaxWidthIndex + 1), std::invalid_argument);
  CHECK(WidthIndex(1).value() == 1);
  CHECK(width_level_closed_form(WidthIndex(kMaxWidthIndex)) ==
        (1 + isqrt(8 * kMaxWidthIndex + 1)) / 4);
}

TEST_CASE("isqrt is exact around perfect squares") {
  for (std::int64_t s = 0; s < 3000; ++s) {
    CHECK(isqrt(s * s) == s);
    if (s > 0) CHECK(isqrt(s * s - 1) == s - 1);
    CHECK(isqrt(s * s + 2 * s) == s);
  }
  const std::int64_t big = 3037000499;  // floor(sqrt(2^63 - 1))
  CHECK(isqrt(big * big) == big);
  CHECK(isqrt(big * big - 1) == big - 1);
  CHECK(isqrt(std::numeric_limits<std::int64_t>::max()) == big);
  CHECK_THROWS_AS(isqrt(-1), std::invalid_argument);
}

TEST_CASE("sweepout dimension") {
  CHECK(sweepout_dimension(0) == 1);
  CHECK(sweepout_dimension(1) == 6);
  CHECK(sweepout_dimension(2) == 15);
  CHECK(sweepout_dimension(6) == 91);
  CHECK(sweepout_dimension(7) == 120);
}

TEST_CASE("width level examples") {
  CHECK(width_level_closed_form(WidthIndex(1)) == 1);
  CHECK(width_level_closed_form(WidthIndex(5)) == 1);
  CHECK(width_level_closed_form(WidthIndex(6)) == 2);
  CHECK(width_level_closed_form(WidthIndex(15)) == 3);
  CHECK(width_level_closed_form(WidthIndex(100)) == 7);
  CHECK(width_level_by_interval(WidthIndex(100)) == 7);
  CHECK(standard_width(WidthIndex(1)) == doctest::Approx(2 * kPi));
  CHECK(standard_width(WidthIndex(6)) == doctest::Approx(4 * kPi));
  CHECK(standard_width(WidthIndex(100)) == doctest::Approx(14 * kPi));
}

TEST_CASE("table up to 14 follows the interval boundaries") {
  for (std::int64_t p = 1; p <= 14; ++p) {
    const double expected = p <= 5 ? 2 * kPi : 4 * kPi;
    CHECK(standard_width(WidthIndex(p)) == expected);
  }
}

TEST_CASE("interval and closed forms agree up to one million") {
  std::int64_t mismatches = 0;
  for (std::int64_t p = 1; p <= 1000000; ++p) {
    if (width_level_by_interval(WidthIndex(p)) !=
        width_level_closed_form(WidthIndex(p))) {
      ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("widths are monotone and jump exactly at interval boundaries") {
  std::vector<std::int64_t> boundaries;
  for (std::int64_t d = 1; sweepout_dimension(d) <= 200001; ++d) {
    boundaries.push_back(sweepout_dimension(d));
  }
  std::size_t next = 0;
  for (std::int64_t p = 1; p <= 200000; ++p) {
    const auto lo = width_level_closed_form(WidthIndex(p));
    const auto hi = width_level_closed_form(WidthIndex(p + 1));
    REQUIRE(hi >= lo);
    const bool at_boundary =
        next < boundaries.size() && boundaries[next] == p + 1;
    CHECK((hi > lo) == at_boundary);
    if (at_boundary) {
      CHECK(hi == lo + 1);
      ++next;
    }
  }
}

TEST_CASE("spectrum examples") {
  const auto r0 = even_length_spectrum(0, 0.1);
  REQUIRE(r0.size() == 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(r0[k] == doctest::Approx(2 * kPi + 0.1 * k).epsilon(1e-15));
  }
  // Values checked against the brute-force enumeration in tests/oracles.
  CHECK(even_length_spectrum(1, 0.05).size() == 14);
  CHECK(even_length_spectrum(2, 1e-3).size() == 27);
  CHECK(even_length_spectrum(3, 0.01).size() == 44);
  CHECK(even_length_spectrum_size(0) == 5);
  CHECK(even_length_spectrum_size(1) == 14);
  CHECK(even_length_spectrum_size(2) == 27);
}

TEST_CASE("spectrum size matches the counting formula for d <= 50") {
  // Every offset of the top shell fits the window iff 4(d+1) mu <= 1.
  for (int d = 0; d <= 50; ++d) {
    CAPTURE(d);
    const double full = 1.0 / (4.0 * (d + 1));
    for (double mu : {1e-6, 0.01 * full, 0.5 * full, 0.999 * full, full}) {
      CHECK(static_cast<std::int64_t>(even_length_spectrum(d, mu).size()) ==
            even_length_spectrum_size(d));
    }
  }
}

TEST_CASE("larger admissible mu truncates the top shell") {
  for (int d = 0; d <= 50; ++d) {
    CAPTURE(d);
    for (double frac : {0.61, 0.83, 0.99}) {
      const double mu = frac * max_spectrum_mu(d);
      const int top = 4 * (d + 1);
      const int kept = static_cast<int>(std::floor(1.0 / mu));
      CHECK(static_cast<std::int64_t>(even_length_spectrum(d, mu).size()) ==
            even_length_spectrum_size(d) - (top - kept));
    }
  }
}

TEST_CASE("spectrum is strictly increasing inside the window") {
  for (int d : {0, 1, 4, 10, 25}) {
    const double mu = 0.5 * max_spectrum_mu(d);
    const auto values = even_length_spectrum(d, mu);
    for (std::size_t i = 0; i < values.size(); ++i) {
      CHECK(values[i] > 0.0);
      CHECK(values[i] <= spectrum_window(d));
      if (i > 0) CHECK(values[i] > values[i - 1]);
    }
    for (const auto& e : even_length_spectrum_entries(d, mu)) {
      CHECK(e.parity() == 0);
      CHECK(e.total() > 0);
    }
  }
}

TEST_CASE("spectrum rejects mu outside the small regime") {
  CHECK_THROWS_AS(even_length_spectrum(1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(even_length_spectrum(1, -0.01), std::invalid_argument);
  CHECK_THROWS_AS(even_length_spectrum(1, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(even_length_spectrum(-1, 0.01), std::invalid_argument);
}

TEST_CASE("reachable offsets fill 0..2*total") {
  for (int j = 1; j <= 12; ++j) {
    const auto offsets = reachable_offsets(2 * j);
    REQUIRE(offsets.size() == static_cast<std::size_t>(4 * j + 1));
    for (int k = 0; k <= 4 * j; ++k) CHECK(offsets[k] == k);
  }
}

TEST_CASE("spectrum entry accessors") {
  const SpectrumEntry e{1, 2, 3, 0.01};
  CHECK(e.total() == 6);
  CHECK(e.offset() == 8);
  CHECK(e.parity() == 0);
  CHECK(e.value() == doctest::Approx(6 * kPi + 0.08));
  CHECK(SpectrumEntry{1, 0, 0, 0.1}.parity() == 1);
}

}  // TEST_SUITE

}  // namespace
}  // namespace rp2w
