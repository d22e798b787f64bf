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

#include "rp2w/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "rp2w/combinatorics.h"
#include "rp2w/curves.h"
#include "rp2w/ellipsoid.h"
#include "rp2w/integral_geometry.h"
#include "rp2w/poly.h"
#include "rp2w/report.h"

#ifndef RP2W_VERSION
#define RP2W_VERSION "unknown"
#endif

namespace rp2w::cli {
namespace {

using report::CsvWriter;
using report::Json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSweepSlack = 0.05;

// Result of one command before it is written out.
struct Outcome {
  Json result;
  bool pass = true;
  // Tabular CSV body; when empty the scalar members of `result` are used.
  std::function<void(std::ostream&)> csv;
};

struct CommonOptions {
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 0;
};

struct CurveOptions {
  std::string preset;
  std::string coeffs;
  int d = 0;
  double colatitude = std::numbers::pi / 3.0;
};

struct SelectedCurve {
  LevelFunction f;
  Json description;
  // Closed-form length on S^2, when known.
  std::optional<double> exact_length;
};

int infer_degree(std::size_t n_coeffs) {
  for (int d = 1; d <= kMaxDegreeParameter; ++d) {
    if (static_cast<std::size_t>(sweepout_dimension(d)) == n_coeffs) return d;
  }
  throw std::invalid_argument("coefficient count " + std::to_string(n_coeffs) +
                              " is not a sweepout dimension (d+1)(2d+1)");
}

SelectedCurve select_curve(const CurveOptions& o) {
  if (!o.preset.empty() && !o.coeffs.empty()) {
    throw std::invalid_argument("--preset and --coeffs are exclusive");
  }
  if (o.preset == "equator") {
    return {AmbientQuadratic::linear(Vec3::UnitZ()),
            {{"preset", "equator"}, {"test_only", true}},
            kTwoPi};
  }
  if (o.preset == "latitude") {
    return {AmbientQuadratic::latitude(o.colatitude),
            {{"preset", "latitude"}, {"colatitude", o.colatitude},
             {"test_only", true}},
            kTwoPi * std::sin(o.colatitude)};
  }
  if (o.preset == "pair") {
    std::vector<double> c(sweepout_dimension(1), 0.0);
    c[0] = 1.0;
    c[1] = -2.0;
    return {SweepPolynomial(1, c),
            {{"preset", "pair"}, {"d", 1}, {"coeffs", c}},
            2.0 * kTwoPi / std::sqrt(2.0)};
  }
  if (!o.preset.empty()) {
    throw std::invalid_argument("unknown preset '" + o.preset + "'");
  }
  if (o.coeffs.empty()) {
    throw std::invalid_argument("one of --preset or --coeffs is required");
  }
  std::vector<double> c;
  try {
    c = Json::parse(o.coeffs).get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("--coeffs: ") + e.what());
  }
  const int d = o.d > 0 ? o.d : infer_degree(c.size());
  SweepPolynomial p(d, c);
  if (p.is_zero()) throw std::invalid_argument("zero coefficient vector");
  return {std::move(p), {{"d", d}, {"coeffs", c}}, std::nullopt};
}

void add_curve_options(CLI::App* cmd, CurveOptions& o) {
  cmd->add_option("--preset", o.preset,
                  "equator | latitude | pair (1 - 2x^2)");
  cmd->add_option("--coeffs", o.coeffs,
                  "JSON array of sweep coefficients in basis order");
  cmd->add_option("--d", o.d, "degree parameter (inferred from --coeffs)");
  cmd->add_option("--colatitude", o.colatitude,
                  "colatitude of the latitude preset");
}

Outcome cmd_widths(std::int64_t p_max, Json& config) {
  config["p_max"] = p_max;
  struct Row {
    std::int64_t p, d, by_interval, closed;
    double omega;
  };
  std::vector<Row> rows;
  bool agree = true;
  for (std::int64_t p = 1; p <= p_max; ++p) {
    const WidthIndex idx(p);
    Row r{p, 0, width_level_by_interval(idx), width_level_closed_form(idx),
          standard_width(idx)};
    r.d = r.by_interval - 1;
    agree = agree && r.by_interval == r.closed;
    rows.push_back(r);
  }
  Outcome o;
  o.pass = agree;
  Json table = Json::array();
  for (const Row& r : rows) {
    table.push_back({{"p", r.p},
                     {"d", r.d},
                     {"f_interval", r.by_interval},
                     {"f_closed", r.closed},
                     {"omega", r.omega},
                     {"agree", r.by_interval == r.closed}});
  }
  o.result = {{"all_agree", agree}, {"rows", table}};
  o.csv = [rows](std::ostream& out) {
    CsvWriter csv(out);
    csv.header({"p", "d", "f_interval", "f_closed", "omega", "agree"});
    for (const Row& r : rows) {
      csv.field(static_cast<long long>(r.p))
          .field(static_cast<long long>(r.d))
          .field(static_cast<long long>(r.by_interval))
          .field(static_cast<long long>(r.closed))
          .field(r.omega)
          .field(r.by_interval == r.closed);
      csv.end_row();
    }
  };
  return o;
}

Outcome cmd_count_r(int d_max, bool with_values, Json& config) {
  config["d_max"] = d_max;
  config["values"] = with_values;
  struct Row {
    int d;
    double mu;
    std::int64_t enumerated, formula;
    std::vector<double> values;
  };
  std::vector<Row> rows;
  bool all_match = true;
  for (int d = 0; d <= d_max; ++d) {
    // Midpoint of the admissible range (0, 1/(2(d+1))).
    const double mu = 1.0 / (4.0 * (d + 1));
    Row r{d, mu, 0, even_length_spectrum_size(d), {}};
    const auto values = even_length_spectrum(d, mu);
    r.enumerated = static_cast<std::int64_t>(values.size());
    if (with_values) r.values = values;
    all_match = all_match && r.enumerated == r.formula;
    rows.push_back(std::move(r));
  }
  Outcome o;
  o.pass = all_match;
  Json table = Json::array();
  for (const Row& r : rows) {
    Json row = {{"d", r.d},
                {"mu", r.mu},
                {"enumerated", r.enumerated},
                {"formula", r.formula},
                {"match", r.enumerated == r.formula}};
    if (with_values) row["values"] = r.values;
    table.push_back(row);
  }
  o.result = {{"all_match", all_match}, {"rows", table}};
  o.csv = [rows](std::ostream& out) {
    CsvWriter csv(out);
    csv.header({"d", "mu", "enumerated", "formula", "match"});
    for (const Row& r : rows) {
      csv.field(r.d)
          .field(r.mu)
          .field(static_cast<long long>(r.enumerated))
          .field(static_cast<long long>(r.formula))
          .field(r.enumerated == r.formula);
      csv.end_row();
    }
  };
  return o;
}

Outcome cmd_basis(int d, Json& config) {
  config["d"] = d;
  const MonomialBasis basis(d);
  Outcome o;
  o.result = report::to_json(basis);
  o.csv = [basis](std::ostream& out) {
    CsvWriter csv(out);
    csv.header({"slot", "part", "x_exp", "y_exp", "z_exp", "label"});
    const auto n_even = basis.even().size();
    for (std::size_t s = 0; s < basis.size(); ++s) {
      const bool even = s < n_even;
      const Monomial& m = even ? basis.even()[s] : basis.odd()[s - n_even];
      csv.field(static_cast<long long>(s))
          .field(even ? "even" : "odd")
          .field(m.x_exp)
          .field(m.y_exp)
          .field(even ? 0 : 1)
          .field(basis.label(s));
      csv.end_row();
    }
  };
  return o;
}

struct CalibrateOptions {
  double mu = 0.0;
  double tol = 1e-10;
  bool geodesics = false;
  bool probe = false;
};

Outcome cmd_calibrate(const CalibrateOptions& opt, Json& config) {
  config["mu"] = opt.mu;
  config["tol"] = opt.tol;
  config["geodesics"] = opt.geodesics;
  config["probe"] = opt.probe;

  const Calibration cal = calibrate(opt.mu, opt.tol);
  Outcome o;
  o.result = report::to_json(cal);
  o.result["targets"] = calibration_targets(opt.mu);
  const Eigen::Matrix3d jac = jacobian_fd(EllipsoidParams::round());
  o.result["round_jacobian"] = report::to_json(jac);
  o.result["round_jacobian_offdiagonal"] = jac(0, 1);
  o.pass = cal.residual <= opt.tol;

  if (opt.geodesics) {
    Json closures = Json::array();
    for (int i = 1; i <= 3; ++i) {
      const ClosureReport c = geodesic_integrate(
          cal.params, axial_start(i, cal.params), 2.0 * kTwoPi);
      Json entry = report::to_json(c);
      entry["geodesic"] = i;
      entry["quadrature_length"] = cal.lengths.sphere[i - 1];
      entry["arc_mismatch"] = std::abs(c.return_arc - cal.lengths.sphere[i - 1]);
      closures.push_back(entry);
    }
    o.result["geodesic_closures"] = closures;
  }
  if (opt.probe) {
    // Empirical only: a generic geodesic is not expected to close quickly.
    Vec3 x = Vec3(0.6, 0.5, 0.62);
    const EllipsoidParams& a = cal.params;
    x /= std::sqrt(a.constraint(x) + 1.0);
    const Vec3 n = a.half_normal(x).normalized();
    Vec3 v = Vec3(0.3, -0.8, 0.4);
    v = (v - v.dot(n) * n).normalized();
    GeodesicOptions go;
    go.stop_at_first_return = false;
    const ClosureReport c = geodesic_integrate(a, {x, v, 0.0}, 3.0 * kTwoPi, go);
    o.result["generic_probe"] = report::to_json(c);
  }
  return o;
}

struct CroftonCliOptions {
  CurveOptions curve;
  int n_samples = 10000;
  bool rp2 = false;
  bool fibonacci = false;
  std::string dump_samples;
};

Outcome cmd_crofton(const CroftonCliOptions& opt, std::uint64_t seed,
                    Json& config) {
  config["preset"] = opt.curve.preset;
  config["coeffs"] = opt.curve.coeffs;
  config["d"] = opt.curve.d;
  config["colatitude"] = opt.curve.colatitude;
  config["n_samples"] = opt.n_samples;
  config["rp2"] = opt.rp2;
  config["sampling"] = opt.fibonacci ? "fibonacci" : "monte-carlo";

  const SelectedCurve curve = select_curve(opt.curve);
  CroftonOptions co;
  co.n_samples = opt.n_samples;
  co.seed = seed;
  co.sampling =
      opt.fibonacci ? SphereSampling::kFibonacci : SphereSampling::kMonteCarlo;
  co.keep_counts = !opt.dump_samples.empty();
  const CroftonEstimate est =
      opt.rp2 ? mass_rp2(curve.f, co) : crofton_length_sphere(curve.f, co);

  Outcome o;
  o.result = report::to_json(est);
  o.result["curve"] = curve.description;
  if (curve.exact_length) {
    const double exact = opt.rp2 ? 0.5 * *curve.exact_length : *curve.exact_length;
    o.result["exact_length"] = exact;
    o.result["relative_error"] = std::abs(est.length_estimate - exact) / exact;
    o.result["within_3se"] =
        std::abs(est.length_estimate - exact) <= 3.0 * est.standard_error;
  }
  if (!opt.dump_samples.empty()) {
    std::ofstream dump(opt.dump_samples);
    CsvWriter csv(dump);
    csv.header({"sample", "count"});
    for (std::size_t i = 0; i < est.counts.size(); ++i) {
      csv.field(static_cast<long long>(i)).field(est.counts[i]);
      csv.end_row();
    }
  }
  return o;
}

Outcome cmd_trace(const CurveOptions& curve_opt, int resolution, Json& config) {
  config["preset"] = curve_opt.preset;
  config["coeffs"] = curve_opt.coeffs;
  config["d"] = curve_opt.d;
  config["colatitude"] = curve_opt.colatitude;
  config["resolution"] = resolution;

  const SelectedCurve curve = select_curve(curve_opt);
  const TracedCurve traced = trace_level_set(curve.f, resolution);
  Outcome o;
  o.result = report::to_json(traced);
  o.result["curve"] = curve.description;
  try {
    o.result["rp2_mass"] = rp2_mass_from_trace(traced);
  } catch (const std::domain_error&) {
    o.result["rp2_mass"] = nullptr;
  }
  if (curve.exact_length) {
    o.result["exact_length_sphere"] = *curve.exact_length;
    o.result["relative_error"] =
        std::abs(traced.total_length_sphere - *curve.exact_length) /
        *curve.exact_length;
  }
  return o;
}

struct AuditOptions {
  int d = 1;
  int n_polys = 100;
  int n_circles = 100;
  std::string dump_samples;
};

Outcome cmd_bezout_audit(const AuditOptions& opt, std::uint64_t seed,
                         Json& config) {
  config["d"] = opt.d;
  config["n_polys"] = opt.n_polys;
  config["n_circles"] = opt.n_circles;

  const BezoutAudit audit = bezout_audit(opt.d, opt.n_polys, opt.n_circles,
                                         seed, !opt.dump_samples.empty());
  Outcome o;
  o.result = report::to_json(audit);
  o.pass = audit.violations.empty();
  if (!opt.dump_samples.empty()) {
    std::ofstream dump(opt.dump_samples);
    CsvWriter csv(dump);
    csv.header({"poly", "circle", "xi_x", "xi_y", "xi_z", "count", "degenerate"});
    for (const auto& s : audit.samples) {
      csv.field(static_cast<long long>(s.poly_index))
          .field(static_cast<long long>(s.circle_index))
          .field(s.xi.x())
          .field(s.xi.y())
          .field(s.xi.z())
          .field(s.count)
          .field(s.degenerate);
      csv.end_row();
    }
  }
  return o;
}

struct ScanOptions {
  int d = 1;
  int n_params = 1000;
  int n_samples = 2000;
  bool refine = false;
  bool fibonacci = false;
  std::string dump_samples;
};

Outcome cmd_sweep_scan(const ScanOptions& opt, std::uint64_t seed,
                       Json& config) {
  config["d"] = opt.d;
  config["n_params"] = opt.n_params;
  config["n_samples"] = opt.n_samples;
  config["refine"] = opt.refine;
  config["sampling"] = opt.fibonacci ? "fibonacci" : "monte-carlo";

  SupMassOptions so;
  so.n_params = opt.n_params;
  so.n_samples_per = opt.n_samples;
  so.seed = seed;
  so.refine = opt.refine;
  so.sampling =
      opt.fibonacci ? SphereSampling::kFibonacci : SphereSampling::kMonteCarlo;
  so.keep_masses = !opt.dump_samples.empty();
  const SupMassReport r = sup_mass_scan(opt.d, so);

  Outcome o;
  o.result = report::to_json(r);
  o.result["slack"] = kSweepSlack;
  o.pass = r.max_mass <= r.bound + kSweepSlack;
  o.result["within_bound"] = o.pass;
  if (!opt.dump_samples.empty()) {
    std::ofstream dump(opt.dump_samples);
    CsvWriter csv(dump);
    csv.header({"param", "mass"});
    for (std::size_t j = 0; j < r.masses.size(); ++j) {
      csv.field(static_cast<long long>(j)).field(r.masses[j]);
      csv.end_row();
    }
  }
  return o;
}

void emit(const Outcome& outcome, const Json& config,
          const CommonOptions& common, std::ostream& stdout_stream) {
  std::ofstream file;
  if (!common.out_path.empty()) {
    file.open(common.out_path);
    if (!file) {
      throw std::invalid_argument("cannot open --out path " + common.out_path);
    }
  }
  std::ostream& out = common.out_path.empty() ? stdout_stream : file;

  if (common.format == "csv") {
    out << "# rp2widths " << version() << '\n';
    out << "# config: " << config.dump() << '\n';
    if (outcome.csv) {
      outcome.csv(out);
    } else {
      report::write_scalar_csv(out, outcome.result);
    }
    return;
  }
  Json envelope = {{"version", version()},
                   {"config", config},
                   {"status", outcome.pass ? "pass" : "fail"},
                   {"result", outcome.result}};
  out << envelope.dump(2) << '\n';
}

}  // namespace

const char* version() { return RP2W_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Numerical checks for the p-widths of the round projective plane",
               "rp2widths"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", version());

  CommonOptions common;
  app.add_option("--seed", common.seed, "PRNG seed")->capture_default_str();
  app.add_option("--format", common.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", common.out_path, "write the report to this path");

  std::int64_t p_max = 0;
  auto* widths = app.add_subcommand("widths", "closed-form width table");
  widths->add_option("--p-max", p_max, "largest p")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{100000000}));

  int d_max = 0;
  bool with_values = false;
  auto* count_r =
      app.add_subcommand("count-r", "even-multiplicity length spectrum sizes");
  count_r->add_option("--d-max", d_max, "largest degree parameter")
      ->required()
      ->check(CLI::Range(0, 500));
  count_r->add_flag("--values", with_values, "include the spectrum values");

  int basis_d = 1;
  auto* basis = app.add_subcommand("basis", "monomial basis ordering");
  basis->add_option("--d", basis_d, "degree parameter")
      ->required()
      ->check(CLI::Range(1, kMaxDegreeParameter));

  CalibrateOptions cal_opt;
  auto* calibrate_cmd =
      app.add_subcommand("calibrate", "calibrate ellipsoid axial lengths");
  calibrate_cmd->add_option("--mu", cal_opt.mu, "length perturbation")
      ->required()
      ->check(CLI::Range(0.0, 0.1));
  calibrate_cmd->add_option("--tol", cal_opt.tol, "residual tolerance")
      ->capture_default_str()
      ->check(CLI::Range(1e-12, 1.0));
  calibrate_cmd->add_flag("--geodesics", cal_opt.geodesics,
                          "integrate the three axial geodesics");
  calibrate_cmd->add_flag("--probe", cal_opt.probe,
                          "integrate one generic geodesic (empirical)");

  CroftonCliOptions crofton_opt;
  auto* crofton = app.add_subcommand("crofton", "Crofton length estimate");
  add_curve_options(crofton, crofton_opt.curve);
  crofton->add_option("--n-samples", crofton_opt.n_samples, "great circles")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  crofton->add_flag("--rp2", crofton_opt.rp2, "report the RP^2 mass");
  crofton->add_flag("--fibonacci", crofton_opt.fibonacci,
                    "Fibonacci-lattice circle normals");
  crofton->add_option("--dump-samples", crofton_opt.dump_samples,
                      "CSV of per-circle counts");

  CurveOptions trace_curve;
  int resolution = 6;
  auto* trace = app.add_subcommand("trace", "trace the zero set on S^2");
  add_curve_options(trace, trace_curve);
  trace->add_option("--resolution", resolution, "icosphere subdivisions")
      ->capture_default_str()
      ->check(CLI::Range(1, 9));

  AuditOptions audit_opt;
  auto* audit = app.add_subcommand("bezout-audit", "intersection count audit");
  audit->add_option("--d", audit_opt.d, "degree parameter")
      ->required()
      ->check(CLI::Range(1, kMaxDegreeParameter));
  audit->add_option("--n-polys", audit_opt.n_polys)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  audit->add_option("--n-circles", audit_opt.n_circles)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  audit->add_option("--dump-samples", audit_opt.dump_samples,
                    "CSV with one row per (polynomial, circle) pair");

  ScanOptions scan_opt;
  auto* scan = app.add_subcommand("sweep-scan", "sup-mass scan over sweepouts");
  scan->add_option("--d", scan_opt.d, "degree parameter")
      ->required()
      ->check(CLI::Range(1, kMaxDegreeParameter));
  scan->add_option("--n-params", scan_opt.n_params)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  scan->add_option("--n-samples", scan_opt.n_samples, "circles per estimate")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  scan->add_flag("--refine", scan_opt.refine, "coordinate-ascent refinement");
  scan->add_flag("--fibonacci", scan_opt.fibonacci,
                 "Fibonacci-lattice circle normals");
  scan->add_option("--dump-samples", scan_opt.dump_samples,
                   "CSV of per-parameter masses");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  Json config = {{"command", cmd->get_name()},
                 {"argv", args},
                 {"seed", common.seed},
                 {"format", common.format}};
  try {
    Outcome outcome;
    if (cmd == widths) {
      outcome = cmd_widths(p_max, config);
    } else if (cmd == count_r) {
      outcome = cmd_count_r(d_max, with_values, config);
    } else if (cmd == basis) {
      outcome = cmd_basis(basis_d, config);
    } else if (cmd == calibrate_cmd) {
      outcome = cmd_calibrate(cal_opt, config);
    } else if (cmd == crofton) {
      outcome = cmd_crofton(crofton_opt, common.seed, config);
    } else if (cmd == trace) {
      outcome = cmd_trace(trace_curve, resolution, config);
    } else if (cmd == audit) {
      outcome = cmd_bezout_audit(audit_opt, common.seed, config);
    } else {
      outcome = cmd_sweep_scan(scan_opt, common.seed, config);
    }
    emit(outcome, config, common, out);
    return outcome.pass ? kExitOk : kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "rp2widths " << cmd->get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "rp2widths " << cmd->get_name() << ": " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace rp2w::cli
