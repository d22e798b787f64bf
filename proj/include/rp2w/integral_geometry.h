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

// Crofton-formula length and mass estimation on S^2 and RP^2, the Bezout
// audit of circle intersection counts, and sup-mass scans over the sweepout
// parameter sphere.
//
// Crofton on the unit sphere: length(C) = (1/4) * integral over xi in S^2 of
// #(C n xi^perp). With xi uniform this is pi * E[count]. On RP^2 the mass of
// the quotient curve is half the length of its antipodally symmetric lift.

#ifndef RP2W_INTEGRAL_GEOMETRY_H_
#define RP2W_INTEGRAL_GEOMETRY_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rp2w/poly.h"

namespace rp2w {

// A circle sample stayed degenerate after the allowed number of redraws,
// which signals a level set that is not a curve (e.g. P vanishing on a whole
// great circle).
class RetryCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SphereSampling {
  kMonteCarlo,
  // Fibonacci lattice; deterministic and independent of the seed except for
  // redraws after degenerate circles.
  kFibonacci,
};

struct CroftonOptions {
  int n_samples = 10000;
  std::uint64_t seed = 0;
  SphereSampling sampling = SphereSampling::kMonteCarlo;
  TangencyPolicy policy = TangencyPolicy::kRetry;
  int max_redraws = 100;
  // Samples per circle for root counting; 0 selects the default density.
  int circle_samples = 0;
  // Keep the per-circle counts in the estimate.
  bool keep_counts = false;
};

struct CroftonEstimate {
  double mean_count = 0.0;
  std::int64_t n_samples = 0;
  std::int64_t degenerate_redraws = 0;
  double length_estimate = 0.0;
  double standard_error = 0.0;
  // True once halved onto RP^2.
  bool quotient = false;
  std::vector<int> counts;
};

CroftonEstimate crofton_length_sphere(const LevelFunction& f,
                                      const CroftonOptions& options);

// Same estimate with every length field halved. Bitwise half of
// crofton_length_sphere with the same options.
CroftonEstimate mass_rp2(const LevelFunction& f, const CroftonOptions& options);

struct BezoutViolation {
  std::int64_t poly_index = 0;
  std::int64_t circle_index = 0;
  int count = 0;
  std::vector<double> coeffs;
  Vec3 xi;
};

struct BezoutSample {
  std::int64_t poly_index = 0;
  std::int64_t circle_index = 0;
  Vec3 xi;
  int count = 0;
  bool degenerate = false;
};

struct BezoutAudit {
  int d = 0;
  int bound = 0;  // 4d
  std::int64_t n_pairs = 0;
  std::int64_t degenerate_pairs = 0;
  int max_count = 0;
  // histogram[k] = number of non-degenerate pairs with k crossings.
  std::vector<std::int64_t> histogram;
  std::vector<BezoutViolation> violations;
  std::vector<BezoutSample> samples;  // filled when requested
};

// Random unit coefficient vectors against random circles; every count above
// 4d is reported as a violation. Degenerate pairs are tallied, not redrawn.
BezoutAudit bezout_audit(int d, int n_polys, int n_circles, std::uint64_t seed,
                         bool keep_samples = false);

struct SupMassOptions {
  int n_params = 1000;
  int n_samples_per = 2000;
  std::uint64_t seed = 0;
  bool refine = false;
  int refine_iterations = 50;
  double refine_initial_step = 0.25;
  SphereSampling sampling = SphereSampling::kMonteCarlo;
  bool keep_masses = false;
};

struct SupMassReport {
  int d = 0;
  int n_params = 0;
  int n_samples_per = 0;
  std::uint64_t seed = 0;
  SphereSampling sampling = SphereSampling::kMonteCarlo;
  bool refined = false;
  double bound = 0.0;  // 2 pi d
  double sampled_max_mass = 0.0;
  double max_mass = 0.0;  // >= sampled_max_mass
  double max_mass_standard_error = 0.0;
  std::vector<double> argmax_coeffs;
  int refine_steps_accepted = 0;
  std::vector<double> masses;  // per parameter sample, when requested
};

// Estimates the RP^2 mass of the zero set for coefficient vectors drawn
// uniformly from the unit sphere of R^D(d). All candidates share one set of
// circles (common random numbers), so differences between them are not
// estimator noise. With refine set, coordinate ascent from the best sample
// perturbs one coefficient at a time, halving the step after a sweep with no
// improvement.
SupMassReport sup_mass_scan(int d, const SupMassOptions& options);

}  // namespace rp2w

#endif  // RP2W_INTEGRAL_GEOMETRY_H_
