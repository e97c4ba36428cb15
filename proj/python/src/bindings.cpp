#include <map>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypoly/bond_lattice.hpp"
#include "hypoly/chromatic.hpp"
#include "hypoly/document.hpp"
#include "hypoly/elimination.hpp"
#include "hypoly/errors.hpp"
#include "hypoly/families.hpp"
#include "hypoly/specials.hpp"
#include "hypoly/suites.hpp"

namespace py = pybind11;
using namespace hypoly;

namespace {

VarKey variable(const std::string& name) {
  auto key = VarKey::parse(name);
  if (!key) throw py::key_error("unknown variable '" + name + "'");
  return *key;
}

// Values may be Poly, int, or anything whose str() is a rational literal.
Poly as_poly(const py::handle& value) {
  if (py::isinstance<Poly>(value)) return value.cast<Poly>();
  if (py::isinstance<py::int_>(value)) return Poly(Integer(py::str(value).cast<std::string>()));
  throw py::type_error("substitution values must be Poly or int");
}

std::vector<std::pair<std::string, std::vector<std::string>>> edge_list(const py::object& edges) {
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  if (py::isinstance<py::dict>(edges)) {
    for (auto [k, v] : edges.cast<py::dict>()) {
      out.emplace_back(k.cast<std::string>(), v.cast<std::vector<std::string>>());
    }
  } else {
    for (auto item : edges) out.push_back(item.cast<std::pair<std::string, std::vector<std::string>>>());
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact hypergraph polynomials";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<InexactDivision>(m, "InexactDivision", PyExc_ArithmeticError);
  py::register_exception<MalformedDocument>(m, "MalformedDocument", PyExc_ValueError);
  py::register_exception<SchemaViolation>(m, "SchemaViolation", PyExc_ValueError);

  py::class_<Poly>(m, "Poly")
      .def(py::init([](long c) { return Poly(c); }), py::arg("constant") = 0)
      .def_static("var", [](const std::string& name) { return Poly::var(variable(name)); })
      .def("__str__", &canonical_string)
      .def("__repr__", [](const Poly& a) { return "Poly('" + canonical_string(a) + "')"; })
      .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
      .def("__eq__", [](const Poly& a, long b) { return a == Poly(b); })
      .def("__hash__", [](const Poly& a) { return py::hash(py::str(canonical_string(a))); })
      .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
      .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
      .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
      .def("__neg__", [](const Poly& a) { return Poly() - a; })
      .def("__pow__", [](const Poly& a, unsigned e) { return a.pow(e); })
      .def("is_zero", &Poly::is_zero)
      .def("collapse_t", &collapse_t, "Identify every per-edge t with the uniform t.")
      .def("substitute",
           [](const Poly& a, const py::dict& bindings) {
             std::map<VarKey, Poly> b;
             for (auto [k, v] : bindings) b.emplace(variable(k.cast<std::string>()), as_poly(v));
             return substitute(a, b);
           })
      .def("evaluate",
           [](const Poly& a, const py::dict& point) {
             std::map<VarKey, Rational> at;
             for (auto [k, v] : point) {
               at.emplace(variable(k.cast<std::string>()), parse_rational(py::str(v).cast<std::string>()));
             }
             const auto value = eval(a, at);
             return py::module_::import("fractions").attr("Fraction")(rational_string(value));
           },
           "Exact value at a point; values are ints, Fractions, or rational strings.")
      .def("terms_json", [](const Poly& a) { return to_json(a).dump(); });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init([](const std::vector<std::string>& vertices, const py::object& edges) {
             return make_hypergraph(vertices, edge_list(edges));
           }),
           py::arg("vertices"), py::arg("edges") = py::dict())
      .def_static("from_json", [](const std::string& text) { return parse_hypergraph(text); })
      .def("to_json", &emit_hypergraph)
      .def_property_readonly("num_vertices", &Hypergraph::num_vertices)
      .def_property_readonly("num_edges", &Hypergraph::num_edges)
      .def_property_readonly("vertices",
                             [](const Hypergraph& h) {
                               std::vector<std::string> out;
                               for (const auto& v : h.vertices()) out.push_back(v.str());
                               return out;
                             })
      .def_property_readonly("edges",
                             [](const Hypergraph& h) {
                               std::vector<std::string> out;
                               for (const auto& e : h.edges()) out.push_back(e.id.str());
                               return out;
                             })
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__", [](const Hypergraph& h) { return "Hypergraph(" + describe(h) + ")"; });

  m.def("xi", [](const Hypergraph& h, const std::string& algo) {
        if (algo == "subset") return xi_subset(h);
        if (algo == "recursive") return xi_recursive(h);
        throw py::value_error("algo must be 'subset' or 'recursive'");
      },
      py::arg("h"), py::arg("algo") = "subset");
  m.def("xi_classic", &xi_classic);
  m.def("chromatic", [](const Hypergraph& h, const std::string& algo) {
        if (algo == "subset") return chromatic_poly(h);
        if (algo == "recursive") return chromatic_recursive(h);
        if (algo == "bridge") return chromatic_via_xi(h);
        if (algo == "sections") return section_decomposition(h);
        if (algo == "mobius") return chromatic_via_mobius(h);
        throw py::value_error("unknown chromatic algorithm '" + algo + "'");
      },
      py::arg("h"), py::arg("algo") = "subset");
  m.def("chromatic_count", [](const Hypergraph& h, unsigned p, unsigned q) { return chromatic_count(h, p, q); });
  m.def("matching", &matching_poly);
  m.def("covering", &covering_poly);
  m.def("transversal", &transversal_poly);
  m.def("section", &section_poly);
  m.def("potts", &potts_poly);
  m.def("coboundary", &coboundary_poly);
  m.def("tutte", &tutte_poly);

  m.def("path", [](unsigned mm, unsigned r) { return make_family(PathSpec{mm, r}); }, py::arg("m"), py::arg("r") = 2);
  m.def("cycle", [](unsigned mm, unsigned r) { return make_family(CycleSpec{mm, r}); }, py::arg("m"), py::arg("r") = 2);
  m.def("hyperstar", [](unsigned n, unsigned r) { return make_family(HyperstarSpec{n, r}); }, py::arg("n"), py::arg("r"));
  m.def("sunflower",
        [](std::vector<unsigned> petals, unsigned s) { return make_family(SunflowerSpec{std::move(petals), s}); },
        py::arg("petals"), py::arg("seeds") = 1);
  m.def("path_xi", &path_xi, py::arg("m"), py::arg("r") = 2);
  m.def("cycle_xi", &cycle_xi, py::arg("m"), py::arg("r") = 2);
  m.def("hyperstar_chromatic", &hyperstar_chromatic_trivariate, py::arg("n"), py::arg("r"));

  m.def("verify", [](const Hypergraph& h) {
    VerifyReport report;
    verify_instance(h, report);
    return py::make_tuple(report.passed(), report.text());
  });
}
