#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quandlekit/alexander.hpp"
#include "quandlekit/decomposition.hpp"
#include "quandlekit/errors.hpp"
#include "quandlekit/group.hpp"
#include "quandlekit/parse.hpp"
#include "quandlekit/verify.hpp"

namespace py = pybind11;
using namespace quandlekit;

namespace {

py::int_ to_py(const BigInt& n) {
  return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(n.str().c_str(), nullptr, 10)));
}

BigInt from_py(const py::int_& n) { return BigInt(py::str(n).cast<std::string>()); }

FiniteQuandle alexander(const std::string& ideal) { return alexander_quandle(parse_ideal(ideal)).quandle; }

}  // namespace

PYBIND11_MODULE(_quandlekit, m) {
  m.doc() = "Finite quandles, Alexander quandles and maximal connected decompositions";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnsupportedPresentation>(m, "UnsupportedPresentation", PyExc_ValueError);
  py::register_exception<NotASubquandle>(m, "NotASubquandle", PyExc_ValueError);
  py::register_exception<AxiomViolationError>(m, "AxiomViolationError", PyExc_ValueError);

  py::class_<FiniteQuandle>(m, "Quandle")
      .def_static("from_rows", &FiniteQuandle::from_rows, py::arg("rows"),
                  py::arg("labels") = std::vector<std::string>{})
      .def_static("trivial", &FiniteQuandle::trivial)
      .def_property_readonly("size", &FiniteQuandle::size)
      .def("op", &FiniteQuandle::op)
      .def("inv_op", &FiniteQuandle::inv_op)
      .def("rows", &FiniteQuandle::rows)
      .def("label", &FiniteQuandle::label)
      .def("restrict_to", &FiniteQuandle::restrict_to)
      .def("__len__", &FiniteQuandle::size)
      .def("__repr__", [](const FiniteQuandle& q) { return "<Quandle of order " + std::to_string(q.size()) + ">"; });

  m.def("alexander", &alexander, py::arg("ideal"), "Alexander quandle of Z[t,t^-1]/(ideal), e.g. \"6; t^2+t+1\".");
  m.def("dihedral", [](int n) { return dihedral(n).quandle; });
  m.def("conj_symmetric", [](int n) { return conj_quandle(symmetric_group(n)); });
  m.def("conj_cyclic", [](int n) { return conj_quandle(cyclic_group(n)); });

  m.def("check_axioms", [](const FiniteQuandle& q) -> std::optional<std::string> {
    const auto v = check_axioms(q);
    if (!v) return std::nullopt;
    return v->describe();
  });
  m.def("type_of", &type_of);
  m.def("components", [](const FiniteQuandle& q) { return connected_components(q); });
  m.def("is_connected", [](const FiniteQuandle& q) { return is_connected(q); });
  m.def("find_isomorphism", &find_isomorphism);
  m.def(
      "maximal_decomposition",
      [](const FiniteQuandle& q, int max_iterations) {
        const auto d = maximal_decomposition(q, max_iterations);
        py::dict r;
        r["depth"] = d.depth;
        r["levels"] = d.levels;
        r["blocks"] = d.final();
        return r;
      },
      py::arg("q"), py::arg("max_iterations") = kDefaultMaxIterations);

  m.def("component_ideal", [](const std::string& ideal) {
    const auto r = component_ideal(parse_ideal(ideal).generators());
    const auto p = presentation_from_generators(r.generators);
    py::dict d;
    d["orbit_count"] = to_py(r.orbit_count);
    d["ideal"] = p.descriptor();
    d["order"] = build_module(p).order();
    return d;
  });
  m.def("prop_5_6", [](const py::int_& n0, const py::int_& a) {
    const auto r = prop_5_6(from_py(n0), from_py(a));
    py::list chain;
    for (const auto& n : r.chain) chain.append(to_py(n));
    py::dict d;
    d["chain"] = chain;
    d["depth"] = r.depth_l;
    d["pieces"] = to_py(r.piece_count_n);
    d["piece_modulus"] = to_py(r.piece_modulus);
    return d;
  });

  m.def(
      "verify",
      [](const std::vector<std::string>& only) {
        VerifyOptions o;
        o.only = only;
        py::list out;
        for (const auto& c : verify_paper(o)) {
          py::dict d;
          d["criterion"] = c.criterion;
          d["group"] = c.group;
          d["claim"] = c.claim;
          d["expected"] = c.expected;
          d["computed"] = c.computed;
          d["pass"] = c.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("only") = std::vector<std::string>{});
}
