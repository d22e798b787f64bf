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

// JSON and CSV serialisation of the module results.

#ifndef RP2W_REPORT_H_
#define RP2W_REPORT_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "json.hpp"
#include "rp2w/curves.h"
#include "rp2w/ellipsoid.h"
#include "rp2w/integral_geometry.h"
#include "rp2w/poly.h"

namespace rp2w::report {

using Json = nlohmann::ordered_json;

Json to_json(const Vec3& v);
Json to_json(const Eigen::Matrix3d& m);
Json to_json(const MonomialBasis& basis);
Json to_json(const CroftonEstimate& est);
Json to_json(const BezoutAudit& audit);
Json to_json(const SupMassReport& report);
Json to_json(const TracedCurve& curve);
Json to_json(const Calibration& cal);
Json to_json(const ClosureReport& closure);

const char* to_string(SphereSampling sampling);

// Shortest round-trip decimal form, independent of the C locale.
std::string format_double(double v);

// Minimal CSV emitter: fields are written verbatim except doubles, which go
// through format_double.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  CsvWriter& field(std::string_view s);
  CsvWriter& field(double v);
  CsvWriter& field(long long v);
  CsvWriter& field(int v) { return field(static_cast<long long>(v)); }
  CsvWriter& field(bool v) { return field(std::string_view(v ? "1" : "0")); }
  void end_row();

  void header(const std::vector<std::string>& names);

 private:
  void separator();

  std::ostream& out_;
  bool row_started_ = false;
};

// One-row CSV of the scalar (non-array, non-object) members of a JSON object.
void write_scalar_csv(std::ostream& out, const Json& object);

}  // namespace rp2w::report

#endif  // RP2W_REPORT_H_
