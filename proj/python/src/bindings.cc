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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "rp2w/cli.h"
#include "rp2w/combinatorics.h"
#include "rp2w/curves.h"
#include "rp2w/ellipsoid.h"
#include "rp2w/integral_geometry.h"
#include "rp2w/poly.h"

namespace py = pybind11;

namespace {

using rp2w::LevelFunction;
using rp2w::SweepPolynomial;
using Point = std::array<double, 3>;

rp2w::Vec3 vec(const Point& p) { return {p[0], p[1], p[2]}; }
Point point(const rp2w::Vec3& v) { return {v.x(), v.y(), v.z()}; }

rp2w::CroftonOptions crofton_options(int n_samples, std::uint64_t seed,
                                     bool fibonacci) {
  rp2w::CroftonOptions o;
  o.n_samples = n_samples;
  o.seed = seed;
  o.sampling = fibonacci ? rp2w::SphereSampling::kFibonacci
                         : rp2w::SphereSampling::kMonteCarlo;
  return o;
}

std::tuple<int, std::string, std::string> run_cli(
    const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = rp2w::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Width spectrum, sweepout and ellipsoid checks for the projective plane.";
  m.attr("__version__") = rp2w::cli::version();

  // Exceptions.
  py::register_exception<rp2w::NearSingular>(
      m, "NearSingular", PyExc_RuntimeError);
  py::register_exception<rp2w::RetryCapExceeded>(m, "RetryCapExceeded",
                                                  PyExc_RuntimeError);
  py::register_exception<rp2w::NoConvergence>(m, "NoConvergence",
                                               PyExc_RuntimeError);
  py::register_exception<rp2w::DriftBudgetExceeded>(m, "DriftBudgetExceeded",
                                                     PyExc_RuntimeError);

  // Combinatorics.
  m.def("sweepout_dimension", &rp2w::sweepout_dimension, py::arg("d"));
  m.def("width_level", [](std::int64_t p) {
    return rp2w::width_level_closed_form(rp2w::WidthIndex(p));
  }, py::arg("p"), "f(p) by the closed form.");
  m.def("width_level_by_interval", [](std::int64_t p) {
    return rp2w::width_level_by_interval(rp2w::WidthIndex(p));
  }, py::arg("p"));
  m.def("standard_width", [](std::int64_t p) {
    return rp2w::standard_width(rp2w::WidthIndex(p));
  }, py::arg("p"), "2 pi f(p).");
  m.def("length_spectrum", &rp2w::even_length_spectrum, py::arg("d"),
        py::arg("mu"));
  m.def("length_spectrum_size", &rp2w::even_length_spectrum_size, py::arg("d"));

  // Polynomials.
  m.def("basis_labels", [](int d) {
    const rp2w::MonomialBasis basis(d);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back(basis.label(i));
    return labels;
  }, py::arg("d"));

  py::class_<SweepPolynomial>(m, "SweepPolynomial")
      .def(py::init<int, std::vector<double>>(), py::arg("d"), py::arg("coeffs"))
      .def_property_readonly("d", &SweepPolynomial::degree_parameter)
      .def_property_readonly("coefficients", [](const SweepPolynomial& p) {
        return std::vector<double>(p.coefficients().begin(), p.coefficients().end());
      })
      .def("__call__", [](const SweepPolynomial& p, const Point& q) {
        return p.eval(vec(q));
      }, py::arg("q"))
      .def("gradient", [](const SweepPolynomial& p, const Point& q) {
        return point(p.gradient(vec(q)));
      }, py::arg("q"))
      .def("count_roots", [](const SweepPolynomial& p, const Point& xi) {
        const LevelFunction f = p;
        const auto rc =
            rp2w::count_circle_roots(rp2w::restrict_to_circle(f, vec(xi)));
        return rc.degenerate ? py::object(py::none()) : py::object(py::int_(rc.crossings));
      }, py::arg("xi"), "Transverse crossings with the great circle xi^perp, "
                        "or None when degenerate.");

  // Integral geometry.
  py::class_<rp2w::CroftonEstimate>(m, "CroftonEstimate")
      .def_readonly("mean_count", &rp2w::CroftonEstimate::mean_count)
      .def_readonly("n_samples", &rp2w::CroftonEstimate::n_samples)
      .def_readonly("degenerate_redraws", &rp2w::CroftonEstimate::degenerate_redraws)
      .def_readonly("length_estimate", &rp2w::CroftonEstimate::length_estimate)
      .def_readonly("standard_error", &rp2w::CroftonEstimate::standard_error)
      .def_readonly("quotient", &rp2w::CroftonEstimate::quotient);

  m.def("crofton_length", [](const SweepPolynomial& p, int n_samples,
                             std::uint64_t seed, bool fibonacci) {
    py::gil_scoped_release release;
    return rp2w::crofton_length_sphere(p, crofton_options(n_samples, seed, fibonacci));
  }, py::arg("poly"), py::arg("n_samples") = 10000, py::arg("seed") = 0,
     py::arg("fibonacci") = false);
  m.def("mass_rp2", [](const SweepPolynomial& p, int n_samples,
                       std::uint64_t seed, bool fibonacci) {
    py::gil_scoped_release release;
    return rp2w::mass_rp2(p, crofton_options(n_samples, seed, fibonacci));
  }, py::arg("poly"), py::arg("n_samples") = 10000, py::arg("seed") = 0,
     py::arg("fibonacci") = false);

  py::class_<rp2w::BezoutAudit>(m, "BezoutAudit")
      .def_readonly("d", &rp2w::BezoutAudit::d)
      .def_readonly("bound", &rp2w::BezoutAudit::bound)
      .def_readonly("n_pairs", &rp2w::BezoutAudit::n_pairs)
      .def_readonly("degenerate_pairs", &rp2w::BezoutAudit::degenerate_pairs)
      .def_readonly("max_count", &rp2w::BezoutAudit::max_count)
      .def_readonly("histogram", &rp2w::BezoutAudit::histogram)
      .def_property_readonly("n_violations", [](const rp2w::BezoutAudit& a) {
        return a.violations.size();
      });
  m.def("bezout_audit", [](int d, int n_polys, int n_circles, std::uint64_t seed) {
    py::gil_scoped_release release;
    return rp2w::bezout_audit(d, n_polys, n_circles, seed);
  }, py::arg("d"), py::arg("n_polys") = 100, py::arg("n_circles") = 100,
     py::arg("seed") = 0);

  py::class_<rp2w::SupMassReport>(m, "SupMassReport")
      .def_readonly("d", &rp2w::SupMassReport::d)
      .def_readonly("bound", &rp2w::SupMassReport::bound)
      .def_readonly("sampled_max_mass", &rp2w::SupMassReport::sampled_max_mass)
      .def_readonly("max_mass", &rp2w::SupMassReport::max_mass)
      .def_readonly("max_mass_standard_error",
                    &rp2w::SupMassReport::max_mass_standard_error)
      .def_readonly("argmax_coeffs", &rp2w::SupMassReport::argmax_coeffs)
      .def_readonly("masses", &rp2w::SupMassReport::masses);
  m.def("sup_mass_scan", [](int d, int n_params, int n_samples_per,
                            std::uint64_t seed, bool refine) {
    rp2w::SupMassOptions o;
    o.n_params = n_params;
    o.n_samples_per = n_samples_per;
    o.seed = seed;
    o.refine = refine;
    o.keep_masses = true;
    py::gil_scoped_release release;
    return rp2w::sup_mass_scan(d, o);
  }, py::arg("d"), py::arg("n_params") = 1000, py::arg("n_samples_per") = 2000,
     py::arg("seed") = 0, py::arg("refine") = false);

  // Level-set tracing.
  py::class_<rp2w::TracedCurve>(m, "TracedCurve")
      .def_readonly("resolution", &rp2w::TracedCurve::resolution)
      .def_property_readonly("components", [](const rp2w::TracedCurve& c) {
        std::vector<std::vector<Point>> out;
        for (const auto& line : c.components) {
          auto& dst = out.emplace_back();
          for (const auto& v : line) dst.push_back(point(v));
        }
        return out;
      })
      .def_readonly("component_lengths", &rp2w::TracedCurve::component_lengths)
      .def_readonly("total_length_sphere", &rp2w::TracedCurve::total_length_sphere)
      .def_readonly("antipodal_partner", &rp2w::TracedCurve::antipodal_partner)
      .def_property_readonly("rp2_mass", &rp2w::rp2_mass_from_trace);
  m.def("trace_level_set", [](const SweepPolynomial& p, int resolution) {
    py::gil_scoped_release release;
    return rp2w::trace_level_set(p, resolution);
  }, py::arg("poly"), py::arg("resolution") = 6);

  // Ellipsoids.
  m.def("gamma_length", [](int i, const std::array<double, 3>& a) {
    return rp2w::gamma_length(i, rp2w::EllipsoidParams(a));
  }, py::arg("i"), py::arg("a"));
  m.def("length_vector", [](const std::array<double, 3>& a) {
    return rp2w::length_vector(rp2w::EllipsoidParams(a)).sphere;
  }, py::arg("a"));
  m.def("jacobian_fd", [](const std::array<double, 3>& a, double h) {
    const Eigen::Matrix3d j = rp2w::jacobian_fd(rp2w::EllipsoidParams(a), h);
    std::array<Point, 3> rows;
    for (int r = 0; r < 3; ++r) rows[r] = {j(r, 0), j(r, 1), j(r, 2)};
    return rows;
  }, py::arg("a") = std::array<double, 3>{1.0, 1.0, 1.0}, py::arg("h") = 1e-5);

  py::class_<rp2w::Calibration>(m, "Calibration")
      .def_readonly("mu", &rp2w::Calibration::mu)
      .def_property_readonly("a", [](const rp2w::Calibration& c) {
        return c.params.values();
      })
      .def_property_readonly("lengths", [](const rp2w::Calibration& c) {
        return c.lengths.sphere;
      })
      .def_property_readonly("rp2_lengths", [](const rp2w::Calibration& c) {
        return c.lengths.rp2();
      })
      .def_readonly("residual", &rp2w::Calibration::residual)
      .def_readonly("iterations", &rp2w::Calibration::iterations);
  m.def("calibrate", &rp2w::calibrate, py::arg("mu"), py::arg("tol") = 1e-10,
        py::arg("max_iterations") = 50);

  py::class_<rp2w::ClosureReport>(m, "ClosureReport")
      .def_readonly("returned", &rp2w::ClosureReport::returned)
      .def_readonly("return_distance", &rp2w::ClosureReport::return_distance)
      .def_readonly("return_arc", &rp2w::ClosureReport::return_arc)
      .def_readonly("closest_distance", &rp2w::ClosureReport::closest_distance)
      .def_readonly("closest_arc", &rp2w::ClosureReport::closest_arc)
      .def_readonly("max_constraint_drift", &rp2w::ClosureReport::max_constraint_drift);
  m.def("axial_geodesic", [](const std::array<double, 3>& a, int i, double max_arc) {
    const rp2w::EllipsoidParams params(a);
    py::gil_scoped_release release;
    return rp2w::geodesic_integrate(params, rp2w::axial_start(i, params), max_arc);
  }, py::arg("a"), py::arg("i"), py::arg("max_arc") = 8.0,
     "Integrate the geodesic starting along gamma_i until its first return.");

  m.def("run_cli", &run_cli, py::arg("args"),
        "Run a CLI subcommand in-process; returns (exit_code, stdout, stderr).");
}
