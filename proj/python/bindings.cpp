#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "paritypoly/alexander.hpp"
#include "paritypoly/gauss.hpp"
#include "paritypoly/json_io.hpp"
#include "paritypoly/realize.hpp"

namespace py = pybind11;
using namespace paritypoly;

namespace {

Var var_from(const std::string& name) {
  if (name == "s") return Var::S;
  if (name == "t") return Var::T;
  if (name == "q") return Var::Q;
  if (name == "h" || name == "theta") return Var::Theta;
  throw py::value_error("unknown variable " + name);
}

py::dict result_dict(const AlexanderResult& r) {
  const CrossingBounds b = crossing_bounds(r.canonical);
  py::dict d;
  d["polynomial"] = r.canonical;
  d["q_width"] = r.q_width;
  d["h_width"] = r.theta_width;
  d["virtual_lower"] = b.virtual_lower;
  d["odd_lower"] = b.odd_lower;
  d["even"] = r.counts.even;
  d["odd"] = r.counts.odd;
  d["virtual"] = r.counts.virtual_crossings;
  return d;
}

}  // namespace

PYBIND11_MODULE(_paritypoly, m) {
  m.doc() = "Parity virtual Alexander polynomial of virtual knot diagrams";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init<>())
      .def(py::init<long>())
      .def_static("parse", &parse_laurent)
      .def_static("from_json", [](const std::string& text) { return laurent_from_json(nlohmann::json::parse(text)); })
      .def("to_json", [](const LaurentPoly& p) { return to_json(p).dump(); })
      .def("is_zero", &LaurentPoly::is_zero)
      .def("canonical", [](const LaurentPoly& p) { return canonicalize(p).poly; })
      .def("width", [](const LaurentPoly& p, const std::string& v) { return width(p, var_from(v)); })
      .def("__str__", &LaurentPoly::to_string)
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.to_string() + "')"; })
      .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
      .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
      .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
      .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
      .def("__neg__", [](const LaurentPoly& a) { return -a; });

  m.def("equal_up_to_unit", &equal_up_to_unit);

  py::class_<DiagramCode>(m, "DiagramCode")
      .def(py::init<>())
      .def_static("parse", &parse_diagram)
      .def_static("from_gauss", [](const std::string& text, std::uint64_t seed) {
        return realize(parse_gauss(text), RealizeOptions{RoutingStrategy::Arch, seed});
      }, py::arg("text"), py::arg("seed") = 0)
      .def("crossing_count", &DiagramCode::crossing_count)
      .def("parity", [](const DiagramCode& c) {
        std::map<int, std::string> out;
        for (const auto& [id, p] : parity(c)) out[id] = p == Parity::Odd ? "odd" : "even";
        return out;
      })
      .def("reverse", [](const DiagramCode& c) { return reverse(c); })
      .def("switch", [](const DiagramCode& c) { return switch_crossings(c); })
      .def("flip", [](const DiagramCode& c) { return flip(c); })
      .def("__str__", &DiagramCode::to_string)
      .def("__repr__", [](const DiagramCode& c) { return "DiagramCode('" + c.to_string() + "')"; })
      .def("__eq__", [](const DiagramCode& a, const DiagramCode& b) { return a == b; });

  m.def("phi_delta", &phi_delta);
  m.def("compute", [](const DiagramCode& c) { return result_dict(parity_alexander(c)); });
  m.def("presentation", &group_presentation);
}
