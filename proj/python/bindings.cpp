#include "sl3/certify.hpp"
#include "sl3/classify.hpp"
#include "sl3/enumerate.hpp"
#include "sl3/error.hpp"
#include "sl3/foam.hpp"
#include "sl3/skein.hpp"
#include "sl3/web_text.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sl3;

namespace {

/// {exponent: int} with Python ints of any size.
py::dict poly_terms(const LaurentPoly& p) {
  py::dict d;
  py::object to_int = py::module_::import("builtins").attr("int");
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_int(c.str());
  return d;
}

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.str());
}

py::dict certificate_dict(const Certificate& c) {
  py::dict d;
  d["verdict"] = std::string(verdict_name(c.kind));
  d["witness"] = c.witness;
  d["boundary_length"] = c.boundary_length;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "sl3 web skein calculus";

  py::register_exception<Error>(m, "Sl3Error", PyExc_ValueError);

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init([](long long c) { return LaurentPoly(c); }), py::arg("constant") = 0)
      .def_static("parse", &LaurentPoly::parse)
      .def_static("quantum_int", &LaurentPoly::quantum_int)
      .def_property_readonly("degree", &LaurentPoly::degree)
      .def_property_readonly("low_degree", &LaurentPoly::low_degree)
      .def("coefficient", [](const LaurentPoly& p, int e) { return py::module_::import("builtins").attr("int")(p.coefficient(e).str()); })
      .def("terms", &poly_terms)
      .def("is_symmetric", &LaurentPoly::is_symmetric)
      .def("is_monic_symmetric", &LaurentPoly::is_monic_symmetric)
      .def("shift", &LaurentPoly::shift)
      .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
      .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
      .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
      .def("__pow__", [](const LaurentPoly& a, unsigned n) { return a.pow(n); })
      .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
      .def("__str__", &LaurentPoly::to_string)
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.to_string() + "')"; });

  py::class_<Web>(m, "Web")
      .def_property_readonly("boundary", [](const Web& w) { return w.boundary().to_string(); })
      .def_property_readonly("vertex_count", &Web::vertex_count)
      .def_property_readonly("edge_count", &Web::edge_count)
      .def_property_readonly("circle_count", &Web::circle_count)
      .def_property_readonly("is_closed", &Web::is_closed)
      .def("canonical_key", &Web::canonical_key)
      .def("to_text", [](const Web& w, const std::string& name) { return to_text(w, name); }, py::arg("name") = "w")
      .def("__eq__", [](const Web& a, const Web& b) { return a == b; })
      .def("__hash__", [](const Web& w) { return std::hash<std::string>()(w.canonical_key()); })
      .def("__repr__", [](const Web& w) {
        return "<Web boundary='" + w.boundary().to_string() + "' vertices=" + std::to_string(w.vertex_count()) + ">";
      });

  m.def("parse_webs", [](const std::string& text) {
    std::vector<std::pair<std::string, Web>> out;
    for (auto& nw : parse_webs(text)) out.emplace_back(nw.name, nw.web);
    return out;
  });
  m.def("load_webs", [](const std::string& path) {
    std::vector<std::pair<std::string, Web>> out;
    for (auto& nw : parse_web_file(path)) out.emplace_back(nw.name, nw.web);
    return out;
  });
  m.def("glue", &glue, py::arg("w1"), py::arg("w2"));
  m.def("mirror", &mirror);

  m.def("bracket", [](const Web& w) { return kuperberg_bracket(w); });
  m.def("graded_hom_dim", [](const Web& a, const Web& b) { return graded_hom_dim(a, b); });
  m.def("reduce", [](const Web& w) {
    std::vector<std::pair<LaurentPoly, Web>> out;
    const SkeinElement reduced = reduce_to_nonelliptic(w);
    for (const auto& [key, t] : reduced.terms()) out.emplace_back(t.coeff, t.web);
    return out;
  });

  m.def("classify", [](const Web& w) {
    Classification k = classify(w);
    py::dict d;
    d["non_elliptic"] = k.non_elliptic;
    d["superficial"] = k.superficial;
    d["semi_non_elliptic"] = k.semi_non_elliptic;
    d["one_elliptic"] = k.one_elliptic;
    d["semi_superficial"] = k.semi_superficial;
    d["blocks"] = k.block_count;
    d["nested"] = k.nested_count;
    d["face_profile"] = k.profile;
    return d;
  });

  m.def("invariant_dim", [](const std::string& signs) { return invariant_dim(SignSequence::parse(signs)); });
  m.def(
      "enumerate",
      [](const std::string& signs, std::optional<int> budget, bool superficial) {
        SignSequence eps = SignSequence::parse(signs);
        int b = budget.value_or(default_vertex_budget(eps));
        return superficial ? enumerate_superficial_non_elliptic(eps, b) : enumerate_non_elliptic(eps, b);
      },
      py::arg("signs"), py::arg("budget") = py::none(), py::arg("superficial") = false);

  m.def("certify_indecomposable", [](const Web& w) { return certificate_dict(certify_indecomposable(w)); });
  m.def("certify_not_isomorphic",
        [](const Web& a, const Web& b) { return certificate_dict(certify_not_isomorphic(a, b)); });
  m.def("is_nice", [](const Web& a, const Web& b) { return certificate_dict(is_nice(a, b)); });
  m.def(
      "verify_key_lemma",
      [](int max_len, std::optional<int> budget, int jobs) {
        KeyLemmaReport r;
        {
          py::gil_scoped_release release;
          r = verify_key_lemma(max_len, budget, jobs);
        }
        py::dict d;
        d["max_len"] = r.max_len;
        d["pairs_checked"] = r.pairs_checked;
        d["symmetric_pairs"] = r.symmetric_pairs;
        d["counterexamples"] = r.counterexamples.size();
        d["all_nice"] = r.all_nice();
        return d;
      },
      py::arg("max_len"), py::arg("budget") = py::none(), py::arg("jobs") = 1);

  m.def("theta_value", &theta_value);
  m.def("evaluate_foams", [](const std::string& text) {
    std::vector<std::tuple<std::string, py::object, int>> out;
    for (const auto& f : parse_foams(text)) out.emplace_back(f.name, fraction(evaluate(f)), degree(f));
    return out;
  });
}
