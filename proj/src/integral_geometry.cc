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

#include "rp2w/integral_geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "rp2w/combinatorics.h"
#include "rp2w/sphere_sampling.h"

namespace rp2w {
namespace {

constexpr std::uint64_t kCircleSalt = 0x43524f46544f4e00ULL;
constexpr std::uint64_t kParamSalt = 0x5357454550000000ULL;
constexpr std::uint64_t kAuditPolySalt = 0x42455a4f55540001ULL;
constexpr std::uint64_t kAuditCircleSalt = 0x42455a4f55540002ULL;

Vec3 draw_circle_normal(const CroftonOptions& o, std::int64_t i, int attempt) {
  if (o.sampling == SphereSampling::kFibonacci && attempt == 0) {
    return fibonacci_sphere_point(static_cast<std::size_t>(i),
                                  static_cast<std::size_t>(o.n_samples));
  }
  SampleStream stream(o.seed, static_cast<std::uint64_t>(i),
                      kCircleSalt + static_cast<std::uint64_t>(attempt));
  return uniform_sphere_point(stream);
}

// Crossing count for sample i, redrawing degenerate circles. nullopt when the
// redraw cap is exhausted.
std::optional<int> count_sample(const LevelFunction& f,
                                const CroftonOptions& o, std::int64_t i,
                                int& redraws) {
  for (int attempt = 0; attempt <= o.max_redraws; ++attempt) {
    const GreatCircle circle(draw_circle_normal(o, i, attempt),
                             static_cast<std::uint64_t>(i));
    const RootCount rc =
        count_circle_roots(CircleRestriction(f, circle), o.policy,
                           o.circle_samples);
    if (!rc.degenerate) return rc.crossings;
    ++redraws;
  }
  return std::nullopt;
}

}  // namespace

CroftonEstimate crofton_length_sphere(const LevelFunction& f,
                                      const CroftonOptions& options) {
  if (options.n_samples < 1) {
    throw std::invalid_argument("n_samples must be >= 1");
  }
  if (const auto* p = std::get_if<SweepPolynomial>(&f); p && p->is_zero()) {
    throw std::invalid_argument("zero polynomial has no zero curve");
  }
  const std::int64_t n = options.n_samples;
  std::vector<int> counts(n, 0);
  std::vector<int> redraws(n, 0);
  std::vector<char> failed(n, 0);

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto c = count_sample(f, options, i, redraws[i]);
    if (c) {
      counts[i] = *c;
    } else {
      failed[i] = 1;
    }
  }
  if (auto it = std::find(failed.begin(), failed.end(), 1); it != failed.end()) {
    throw RetryCapExceeded(
        "circle sample " + std::to_string(it - failed.begin()) +
        " stayed degenerate after " + std::to_string(options.max_redraws) +
        " redraws");
  }

  CroftonEstimate est;
  est.n_samples = n;
  double sum = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    sum += counts[i];
    est.degenerate_redraws += redraws[i];
  }
  est.mean_count = sum / static_cast<double>(n);
  double ss = 0.0;
  for (int c : counts) ss += (c - est.mean_count) * (c - est.mean_count);
  const double variance = n > 1 ? ss / static_cast<double>(n - 1) : 0.0;
  est.length_estimate = std::numbers::pi * est.mean_count;
  est.standard_error =
      std::numbers::pi * std::sqrt(variance / static_cast<double>(n));
  if (options.keep_counts) est.counts = std::move(counts);
  return est;
}

CroftonEstimate mass_rp2(const LevelFunction& f, const CroftonOptions& options) {
  CroftonEstimate est = crofton_length_sphere(f, options);
  est.length_estimate *= 0.5;
  est.standard_error *= 0.5;
  est.quotient = true;
  return est;
}

BezoutAudit bezout_audit(int d, int n_polys, int n_circles, std::uint64_t seed,
                         bool keep_samples) {
  if (n_polys < 1 || n_circles < 1) {
    throw std::invalid_argument("n_polys and n_circles must be >= 1");
  }
  const auto dim = static_cast<std::size_t>(sweepout_dimension(d));
  BezoutAudit audit;
  audit.d = d;
  audit.bound = 4 * d;
  audit.histogram.assign(audit.bound + 1, 0);

  for (int p = 0; p < n_polys; ++p) {
    SampleStream coeff_stream(seed, static_cast<std::uint64_t>(p),
                              kAuditPolySalt);
    const LevelFunction f =
        SweepPolynomial(d, uniform_unit_vector(coeff_stream, dim));
    const auto& poly = std::get<SweepPolynomial>(f);
    std::vector<RootCount> results(n_circles);
    std::vector<Vec3> normals(n_circles);

#pragma omp parallel for schedule(static)
    for (int c = 0; c < n_circles; ++c) {
      SampleStream circle_stream(
          seed, static_cast<std::uint64_t>(p) * n_circles + c,
          kAuditCircleSalt);
      normals[c] = uniform_sphere_point(circle_stream);
      results[c] = count_circle_roots(
          CircleRestriction(f, GreatCircle(normals[c])), TangencyPolicy::kRetry);
    }

    for (int c = 0; c < n_circles; ++c) {
      const RootCount& rc = results[c];
      ++audit.n_pairs;
      if (keep_samples) {
        audit.samples.push_back({p, c, normals[c], rc.crossings, rc.degenerate});
      }
      if (rc.degenerate) {
        ++audit.degenerate_pairs;
        continue;
      }
      audit.max_count = std::max(audit.max_count, rc.crossings);
      if (rc.crossings >= static_cast<int>(audit.histogram.size())) {
        audit.histogram.resize(rc.crossings + 1, 0);
      }
      ++audit.histogram[rc.crossings];
      if (rc.crossings > audit.bound) {
        const auto coeffs = poly.coefficients();
        audit.violations.push_back({p, c, rc.crossings,
                                    {coeffs.begin(), coeffs.end()},
                                    normals[c]});
      }
    }
  }
  return audit;
}

SupMassReport sup_mass_scan(int d, const SupMassOptions& options) {
  if (options.n_params < 1 || options.n_samples_per < 1) {
    throw std::invalid_argument("n_params and n_samples_per must be >= 1");
  }
  const auto dim = static_cast<std::size_t>(sweepout_dimension(d));
  CroftonOptions crofton;
  crofton.n_samples = options.n_samples_per;
  crofton.seed = options.seed;
  crofton.sampling = options.sampling;

  SupMassReport report;
  report.d = d;
  report.n_params = options.n_params;
  report.n_samples_per = options.n_samples_per;
  report.seed = options.seed;
  report.sampling = options.sampling;
  report.refined = options.refine;
  report.bound = 2.0 * std::numbers::pi * d;

  // nullopt for a structurally degenerate candidate.
  auto estimate = [&](const std::vector<double>& coeffs)
      -> std::optional<CroftonEstimate> {
    try {
      return mass_rp2(SweepPolynomial(d, coeffs), crofton);
    } catch (const RetryCapExceeded&) {
      return std::nullopt;
    }
  };

  std::vector<double> best;
  double best_mass = -1.0;
  double best_se = 0.0;
  for (int j = 0; j < options.n_params; ++j) {
    SampleStream stream(options.seed, static_cast<std::uint64_t>(j),
                        kParamSalt);
    std::vector<double> coeffs = uniform_unit_vector(stream, dim);
    const auto est = estimate(coeffs);
    const double mass = est ? est->length_estimate : 0.0;
    if (options.keep_masses) report.masses.push_back(mass);
    if (est && mass > best_mass) {
      best_mass = mass;
      best_se = est->standard_error;
      best = std::move(coeffs);
    }
  }
  report.sampled_max_mass = best_mass;

  if (options.refine && !best.empty()) {
    double step = options.refine_initial_step;
    for (int it = 0; it < options.refine_iterations; ++it) {
      bool improved = false;
      for (std::size_t axis = 0; axis < dim; ++axis) {
        for (double dir : {1.0, -1.0}) {
          std::vector<double> cand = best;
          cand[axis] += dir * step;
          double norm2 = 0.0;
          for (double c : cand) norm2 += c * c;
          if (norm2 == 0.0) continue;
          for (double& c : cand) c /= std::sqrt(norm2);
          const auto est = estimate(cand);
          if (est && est->length_estimate > best_mass) {
            best_mass = est->length_estimate;
            best_se = est->standard_error;
            best = std::move(cand);
            improved = true;
            ++report.refine_steps_accepted;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
  }

  report.max_mass = best_mass;
  report.max_mass_standard_error = best_se;
  report.argmax_coeffs = std::move(best);
  return report;
}

}  // namespace rp2w
