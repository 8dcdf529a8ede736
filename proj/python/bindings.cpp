#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hilbscroll/components.hpp"
#include "hilbscroll/error.hpp"
#include "hilbscroll/gonal.hpp"
#include "hilbscroll/oracle.hpp"
#include "hilbscroll/projections.hpp"
#include "hilbscroll/report_io.hpp"
#include "hilbscroll/scroll.hpp"
#include "hilbscroll/series.hpp"

namespace py = pybind11;
using namespace hilbscroll;

PYBIND11_MODULE(_hilbscroll, m) {
  m.doc() = "Exact dimension counts for Hilbert-scheme components of special scrolls";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::object err = input_error;
      py::object inst = err(e.what());
      inst.attr("code") = e.code();
      PyErr_SetObject(err.ptr(), inst.ptr());
    }
  });

  py::class_<ScrollParams>(m, "ScrollParams")
      .def_readonly("d", &ScrollParams::d)
      .def_readonly("g", &ScrollParams::g)
      .def_readonly("h1", &ScrollParams::h1)
      .def_readonly("R", &ScrollParams::R)
      .def("__eq__", [](const ScrollParams& a, const ScrollParams& b) { return a == b; })
      .def("__repr__", [](const ScrollParams& p) {
        return "ScrollParams(d=" + std::to_string(p.d) + ", g=" + std::to_string(p.g) +
               ", h1=" + std::to_string(p.h1) + ", R=" + std::to_string(p.R) + ")";
      });

  py::class_<GonalParams>(m, "GonalParams")
      .def_readonly("g", &GonalParams::g)
      .def_readonly("t", &GonalParams::t)
      .def_readonly("l", &GonalParams::l)
      .def_readonly("d", &GonalParams::d)
      .def_readonly("a", &GonalParams::a)
      .def_readonly("m", &GonalParams::m)
      .def_property_readonly("R", &GonalParams::R);

  py::class_<ProjectionParams>(m, "ProjectionParams")
      .def_readonly("d", &ProjectionParams::d)
      .def_readonly("g", &ProjectionParams::g)
      .def_readonly("l", &ProjectionParams::l)
      .def_readonly("k", &ProjectionParams::k)
      .def_readonly("m", &ProjectionParams::m)
      .def_readonly("r", &ProjectionParams::r);

  py::class_<CohomologyTriple>(m, "CohomologyTriple")
      .def_readonly("h0", &CohomologyTriple::h0)
      .def_readonly("h1n", &CohomologyTriple::h1n)
      .def_readonly("h2", &CohomologyTriple::h2)
      .def_readonly("chi", &CohomologyTriple::chi);

  // series
  m.def("brill_noether_rho", py::overload_cast<Int, Int, Int>(&brill_noether_rho), py::arg("g"),
        py::arg("r"), py::arg("m"));
  m.def("riemann_roch_h0", &riemann_roch_h0, py::arg("g"), py::arg("deg"), py::arg("h1"));
  m.def("clifford_index_general", &clifford_index_general, py::arg("g"));
  m.def("gonality_general", &gonality_general, py::arg("g"));
  m.def(
      "max_special_degree",
      [](Int g, Int h1) {
        const MaxSpecialDegree r = max_special_degree(g, h1);
        return py::make_tuple(r.hbar, r.mbar);
      },
      py::arg("g"), py::arg("h1"));

  // scroll
  m.def("make_scroll", &make_scroll, py::arg("d"), py::arg("g"), py::arg("h1"));
  m.def("min_degree_threshold", &min_degree_threshold, py::arg("g"), py::arg("h1"));
  m.def(
      "normal_bundle_cohomology",
      [](const ScrollParams& p, Int mm, Int t) { return normal_bundle_cohomology(p, mm, t); },
      py::arg("p"), py::arg("m"), py::arg("t_basepoints") = 0);
  m.def(
      "h0_explicit", [](const ScrollParams& p, Int mm) { return h0_explicit(p, mm); },
      py::arg("p"), py::arg("m"));

  // components
  m.def("admissible_m_range", &admissible_m_range, py::arg("g"), py::arg("h1"));
  m.def("component_dimension", &component_dimension, py::arg("p"), py::arg("m"));
  m.def("component_dimension_h1_1", &component_dimension_h1_1, py::arg("d"), py::arg("g"));
  m.def("singular_point_predicate", &singular_point_predicate, py::arg("g"), py::arg("h1"),
        py::arg("m"));
  m.def(
      "classify_json",
      [](Int d, Int g, Int h1, bool gonal) { return report_to_json(classify(make_scroll(d, g, h1), gonal)); },
      py::arg("d"), py::arg("g"), py::arg("h1"), py::arg("gonal") = false);
  m.def(
      "classify_csv",
      [](Int d, Int g, Int h1, bool gonal) {
        return components_csv_header() + components_csv_rows(classify(make_scroll(d, g, h1), gonal));
      },
      py::arg("d"), py::arg("g"), py::arg("h1"), py::arg("gonal") = false);

  // gonal
  m.def("ballico_a", &ballico_a, py::arg("g"), py::arg("t"));
  m.def("kk_very_ample", &kk_very_ample, py::arg("g"), py::arg("t"), py::arg("l"));
  m.def("make_gonal", &make_gonal, py::arg("g"), py::arg("t"), py::arg("l"), py::arg("d"));
  m.def("z_component_dimension", &z_component_dimension, py::arg("gp"));
  m.def(
      "h_component_dimension", [](const GonalParams& gp) { return h_component_dimension_at_gonal_m(gp).value; },
      py::arg("gp"));
  m.def("z_vs_h_difference", &z_vs_h_difference, py::arg("gp"));
  m.def("rem19608_family", &rem19608_family, py::arg("l"));
  m.def(
      "gonal_json",
      [](const GonalParams& gp, bool verify) { return gonal_record_to_json(make_gonal_record(gp, verify)); },
      py::arg("gp"), py::arg("with_oracle") = false);

  // projections
  m.def("make_projection", &make_projection, py::arg("d"), py::arg("g"), py::arg("l"),
        py::arg("k"), py::arg("m"));
  m.def("y_dim_lower_bound", &y_dim_lower_bound, py::arg("pp"));
  m.def("y_vs_target_difference", &y_vs_target_difference, py::arg("pp"));
  m.def(
      "divisor_case",
      [](Int d, Int g) {
        const DivisorCase dc = divisor_case(d, g);
        return py::make_tuple(dc.h_dim, dc.y_dim);
      },
      py::arg("d"), py::arg("g"));
  m.def(
      "project_json",
      [](Int d, Int g, Int l, Int k, Int mm) {
        return projection_record_to_json(make_projection_record(make_projection(d, g, l, k, mm)));
      },
      py::arg("d"), py::arg("g"), py::arg("l"), py::arg("k"), py::arg("m"));

  // oracle
  m.def("dim_via_parameter_count", &oracle::dim_via_parameter_count, py::arg("p"), py::arg("m"));
  m.def("z_dim_via_parameter_count", &oracle::z_dim_via_parameter_count, py::arg("gp"));
}
