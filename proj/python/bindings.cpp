#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsv/algebra.hpp"
#include "gsv/errors.hpp"
#include "gsv/indices.hpp"
#include "gsv/oracle.hpp"
#include "gsv/parse.hpp"
#include "gsv/report.hpp"

namespace py = pybind11;
using namespace gsv;

namespace {

using Names = std::vector<std::string>;

VectorField parse_field(const std::vector<std::string>& comps, const Names& vars) {
  std::vector<Polynomial> p;
  for (const auto& c : comps) p.push_back(parse_poly(c, vars));
  return VectorField(std::move(p));
}

py::dict report_dict(const IndexReport& r) {
  return py::module_::import("json").attr("loads")(render_report_json(r));
}

py::dict verdict_dict(const OracleVerdict& v) {
  return py::module_::import("json").attr("loads")(render_verdict_json(v));
}

}  // namespace

PYBIND11_MODULE(_gsvindex, m) {
  m.doc() = "Exact Poincare-Hopf and GSV indices of polynomial vector fields";

  static py::exception<MathError> math_error(m, "MathError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const MathError& e) {
      py::object err = math_error;
      py::object inst = err(e.what());
      inst.attr("kind") = MathError::kind_name(e.kind());
      PyErr_SetObject(math_error.ptr(), inst.ptr());
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("expand", [](const std::string& text, const Names& vars) { return parse_poly(text, vars).to_string(vars); },
        py::arg("text"), py::arg("variables"));

  m.def("elk_index", [](const std::vector<std::string>& X, const Names& vars) {
    return elk_index(parse_field(X, vars));
  }, py::arg("field"), py::arg("variables"));

  m.def("elk_report", [](const std::vector<std::string>& X, const Names& vars, bool show_gram) {
    return report_dict(elk_report(parse_field(X, vars), vars, {FormulaVariant::Reduced, show_gram}));
  }, py::arg("field"), py::arg("variables"), py::arg("show_gram") = false);

  m.def("gsv_report", [](const std::string& f, const std::vector<std::string>& X, const Names& vars,
                         const std::string& variant, bool show_gram) {
    return report_dict(gsv_report(parse_poly(f, vars), parse_field(X, vars), vars,
                                  {parse_variant(variant), show_gram}));
  }, py::arg("f"), py::arg("field"), py::arg("variables"), py::arg("variant") = "reduced",
        py::arg("show_gram") = false);

  m.def("sigma_report", [](const std::string& f, const Names& vars) {
    return report_dict(sigma_report(parse_poly(f, vars), vars));
  }, py::arg("f"), py::arg("variables"));

  m.def("hamiltonian", [](const std::string& f, const Names& vars) {
    VectorField X = canonical_hamiltonian(parse_poly(f, vars));
    std::vector<std::string> out;
    for (const auto& c : X.components()) out.push_back(c.to_string(vars));
    return out;
  }, py::arg("f"), py::arg("variables"));

  m.def("algebra", [](const std::vector<std::string>& gens, const Names& vars, const std::string& order) {
    std::vector<Polynomial> g;
    for (const auto& s : gens) g.push_back(parse_poly(s, vars));
    if (order != "local" && order != "global") throw InputError("order must be local or global");
    QuotientAlgebra A(g, order == "local" ? OrderKind::LocalNegDegRevLex : OrderKind::GlobalDegRevLex);
    std::vector<std::string> basis;
    for (const auto& mono : A.basis()) basis.push_back(Polynomial::term(mono, 1).to_string(vars));
    py::dict d;
    d["dim"] = A.dim();
    d["basis"] = basis;
    d["socle_dim"] = socle(A).dim();
    return d;
  }, py::arg("generators"), py::arg("variables"), py::arg("order") = "local");

  m.def("degree", [](const std::vector<std::string>& X, const Names& vars, const std::string& radius) {
    VectorField F = parse_field(X, vars);
    if (radius.empty()) return verdict_dict(degree_at_origin(F));
    return verdict_dict(degree(F, Box::cube(F.nvars(), parse_rational(radius))));
  }, py::arg("field"), py::arg("variables"), py::arg("radius") = "");

  m.def("curve_gsv", [](const std::string& f, const std::vector<std::string>& X, const Names& vars, int side,
                        const std::string& radius, const std::string& epsilon) {
    return verdict_dict(curve_gsv(parse_poly(f, vars), parse_field(X, vars), side, parse_rational(radius),
                                  side * abs(parse_rational(epsilon))));
  }, py::arg("f"), py::arg("field"), py::arg("variables"), py::arg("side"), py::arg("radius") = "1/2",
        py::arg("epsilon") = "1/100");
}
