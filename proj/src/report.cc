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

#include "rp2w/report.h"

#include <array>
#include <charconv>
#include <cmath>

namespace rp2w::report {

Json to_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Json to_json(const Eigen::Matrix3d& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    rows.push_back(Json::array({m(i, 0), m(i, 1), m(i, 2)}));
  }
  return rows;
}

Json to_json(const MonomialBasis& basis) {
  Json slots = Json::array();
  const auto n_even = basis.even().size();
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const bool even = s < n_even;
    const Monomial& m = even ? basis.even()[s] : basis.odd()[s - n_even];
    slots.push_back({{"slot", s},
                     {"part", even ? "even" : "odd"},
                     {"x_exp", m.x_exp},
                     {"y_exp", m.y_exp},
                     {"z_exp", even ? 0 : 1},
                     {"label", basis.label(s)}});
  }
  return {{"d", basis.degree_parameter()},
          {"n_even", n_even},
          {"n_odd", basis.odd().size()},
          {"dimension", basis.size()},
          {"slots", slots}};
}

Json to_json(const CroftonEstimate& est) {
  return {{"mean_count", est.mean_count},
          {"n_samples", est.n_samples},
          {"degenerate_redraws", est.degenerate_redraws},
          {"length_estimate", est.length_estimate},
          {"standard_error", est.standard_error},
          {"quotient", est.quotient ? "rp2" : "sphere"}};
}

Json to_json(const BezoutAudit& audit) {
  Json violations = Json::array();
  for (const auto& v : audit.violations) {
    violations.push_back({{"poly_index", v.poly_index},
                          {"circle_index", v.circle_index},
                          {"count", v.count},
                          {"coeffs", v.coeffs},
                          {"xi", to_json(v.xi)}});
  }
  return {{"d", audit.d},
          {"bound", audit.bound},
          {"n_pairs", audit.n_pairs},
          {"degenerate_pairs", audit.degenerate_pairs},
          {"max_count", audit.max_count},
          {"histogram", audit.histogram},
          {"n_violations", audit.violations.size()},
          {"violations", violations}};
}

const char* to_string(SphereSampling sampling) {
  return sampling == SphereSampling::kFibonacci ? "fibonacci" : "monte-carlo";
}

Json to_json(const SupMassReport& r) {
  return {{"d", r.d},
          {"n_params", r.n_params},
          {"n_samples_per", r.n_samples_per},
          {"seed", r.seed},
          {"sampling", to_string(r.sampling)},
          {"refined", r.refined},
          {"bound", r.bound},
          {"sampled_max_mass", r.sampled_max_mass},
          {"max_mass", r.max_mass},
          {"max_mass_standard_error", r.max_mass_standard_error},
          {"refine_steps_accepted", r.refine_steps_accepted},
          {"argmax_coeffs", r.argmax_coeffs}};
}

Json to_json(const TracedCurve& curve) {
  Json components = Json::array();
  for (std::size_t c = 0; c < curve.components.size(); ++c) {
    Json vertices = Json::array();
    for (const Vec3& v : curve.components[c]) vertices.push_back(to_json(v));
    components.push_back({{"length", curve.component_lengths[c]},
                          {"antipodal_partner", curve.antipodal_partner[c]},
                          {"vertices", vertices}});
  }
  return {{"resolution", curve.resolution},
          {"n_components", curve.components.size()},
          {"total_length_sphere", curve.total_length_sphere},
          {"antipodal_mismatch", curve.antipodal_mismatch},
          {"components", components}};
}

Json to_json(const Calibration& cal) {
  const auto& a = cal.params.values();
  const auto rp2 = cal.lengths.rp2();
  const char* order = (a[0] < a[1] && a[1] < a[2])   ? "increasing"
                      : (a[0] > a[1] && a[1] > a[2]) ? "decreasing"
                                                     : "mixed";
  return {{"mu", cal.mu},
          {"a", a},
          {"lengths", cal.lengths.sphere},
          {"rp2_lengths", rp2},
          {"residual", cal.residual},
          {"iterations", cal.iterations},
          {"parameter_order", order}};
}

Json to_json(const ClosureReport& c) {
  return {{"returned", c.returned},
          {"return_distance", c.return_distance},
          {"return_velocity_mismatch", c.return_velocity_mismatch},
          {"return_arc", c.return_arc},
          {"closest_distance", std::isfinite(c.closest_distance)
                                   ? Json(c.closest_distance)
                                   : Json(nullptr)},
          {"closest_arc", c.closest_arc},
          {"arc_integrated", c.arc_integrated},
          {"max_constraint_drift", c.max_constraint_drift},
          {"max_speed_drift", c.max_speed_drift}};
}

std::string format_double(double v) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

void CsvWriter::separator() {
  if (row_started_) out_ << ',';
  row_started_ = true;
}

CsvWriter& CsvWriter::field(std::string_view s) {
  separator();
  out_ << s;
  return *this;
}

CsvWriter& CsvWriter::field(double v) {
  separator();
  out_ << format_double(v);
  return *this;
}

CsvWriter& CsvWriter::field(long long v) {
  separator();
  out_ << v;
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  row_started_ = false;
}

void CsvWriter::header(const std::vector<std::string>& names) {
  for (const auto& n : names) field(n);
  end_row();
}

void write_scalar_csv(std::ostream& out, const Json& object) {
  CsvWriter csv(out);
  std::vector<std::pair<std::string, const Json*>> scalars;
  for (const auto& [key, value] : object.items()) {
    if (!value.is_structured()) scalars.emplace_back(key, &value);
  }
  for (const auto& [key, value] : scalars) csv.field(key);
  csv.end_row();
  for (const auto& [key, value] : scalars) {
    if (value->is_number_float()) {
      csv.field(value->get<double>());
    } else if (value->is_string()) {
      csv.field(value->get<std::string>());
    } else {
      csv.field(value->dump());
    }
  }
  csv.end_row();
}

}  // namespace rp2w::report
