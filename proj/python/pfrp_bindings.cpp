// Copyright 2026 The parafermion-rp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfrp/cli.hpp"
#include "pfrp/errors.hpp"
#include "pfrp/hamiltonian.hpp"
#include "pfrp/polynomial_io.hpp"
#include "pfrp/report_json.hpp"
#include "pfrp/rp.hpp"

namespace py = pybind11;
using namespace pfrp;

namespace {

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(pfrp, m) {
  m.doc() = "Parafermion algebra and reflection-positivity checks";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::enum_<Half>(m, "Half").value("minus", Half::minus).value("plus", Half::plus);

  py::class_<ExponentVector>(m, "ExponentVector")
      .def(py::init<int, std::vector<int>>(), py::arg("order"), py::arg("entries"))
      .def_property_readonly("order", &ExponentVector::order)
      .def_property_readonly("sites", &ExponentVector::sites)
      .def_property_readonly("entries", [](const ExponentVector& e) {
        return std::vector<int>(e.entries().begin(), e.entries().end());
      })
      .def("supported_on", &ExponentVector::supported_on)
      .def("__eq__", [](const ExponentVector& a, const ExponentVector& b) { return a == b; })
      .def("__hash__", [](const ExponentVector& e) { return py::hash(py::str(e.to_string())); })
      .def("__repr__", [](const ExponentVector& e) { return "ExponentVector" + e.to_string(); });

  m.def("degree", &degree);
  m.def("circ", &circ);
  m.def("complement", &complement);
  m.def("reflect_vector", &reflect_vector);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<int, int>(), py::arg("order"), py::arg("sites"))
      .def_static("identity", &Polynomial::identity, py::arg("order"), py::arg("sites"),
                  py::arg("scale") = Complex(1.0))
      .def_static("monomial", py::overload_cast<const ExponentVector&, Complex>(&Polynomial::monomial),
                  py::arg("exponents"), py::arg("coefficient") = Complex(1.0))
      .def_static("generator", &Polynomial::generator, py::arg("order"), py::arg("sites"), py::arg("site"),
                  py::arg("power") = 1)
      .def_static("parse", &parse_polynomial, py::arg("text"), py::arg("order"), py::arg("sites"))
      .def_property_readonly("order", &Polynomial::order)
      .def_property_readonly("sites", &Polynomial::sites)
      .def("coefficient", &Polynomial::coefficient)
      .def("terms", [](const Polynomial& p) {
        std::vector<std::pair<std::vector<int>, Complex>> out;
        for (const auto& [e, c] : p.terms()) out.emplace_back(std::vector<int>(e.entries().begin(), e.entries().end()), c);
        return out;
      })
      .def("__len__", &Polynomial::size)
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__mul__", [](const Polynomial& a, Complex s) { return a * s; })
      .def("__rmul__", [](const Polynomial& a, Complex s) { return s * a; })
      .def("__str__", &format_polynomial);

  m.def("approx_equal", &approx_equal, py::arg("a"), py::arg("b"), py::arg("tol") = kCoefficientTolerance);
  m.def("adjoint", &adjoint);
  m.def("reflect", &reflect);
  m.def("gauge_apply", &gauge_apply, py::arg("p"), py::arg("site") = py::none());
  m.def("in_observable_algebra", &in_observable_algebra);
  m.def("hermitian_pair", &hermitian_pair);

  py::class_<Representation>(m, "Representation")
      .def(py::init<int, int, std::size_t>(), py::arg("order"), py::arg("sites"),
           py::arg("dimension_cap") = kDefaultDimensionCap)
      .def_property_readonly("dimension", &Representation::dimension)
      .def("generator", &Representation::generator, py::arg("site"))
      .def("to_matrix", &Representation::to_matrix)
      .def("monomial", &Representation::monomial);

  m.def("trace_monomial", &trace_monomial);
  m.def("decompose", [](const Matrix& a, const Representation& rep) { return decompose(a, rep); });
  m.def("verify_yamazaki", [](const Representation& rep) { return to_python(to_json(verify_yamazaki(rep))); });

  py::class_<HamiltonianSpec>(m, "HamiltonianSpec")
      .def_property_readonly("h_minus", &HamiltonianSpec::h_minus)
      .def_property_readonly("h_zero", &HamiltonianSpec::h_zero)
      .def_property_readonly("h_plus", &HamiltonianSpec::h_plus)
      .def_property_readonly("total", &HamiltonianSpec::total)
      .def_property_readonly("rule", [](const HamiltonianSpec& h) { return to_string(h.rule()); });

  auto couplings_from = [](const std::vector<std::pair<ExponentVector, double>>& list) {
    CouplingTable table;
    for (const auto& [e, j] : list) table.emplace(e, j);
    return table;
  };
  m.def("build_h0", [=](const std::vector<std::pair<ExponentVector, double>>& c, int order, int sites) {
    return build_h0(couplings_from(c), order, sites);
  });
  m.def("assemble", [=](const Polynomial& h_minus, const std::vector<std::pair<ExponentVector, double>>& c) {
    return assemble(h_minus, couplings_from(c));
  });
  m.def("baxter", [](int order, int sites, const std::vector<double>& t) { return baxter(order, sites, t); });

  m.def("matrix_exp", &matrix_exp);
  m.def(
      "check_rp",
      [](const HamiltonianSpec& h, const Representation& rep, int samples, std::uint64_t seed, double tol) {
        return to_python(to_json(check_rp(h, rep, {samples, seed, tol, 8})));
      },
      py::arg("spec"), py::arg("rep"), py::arg("samples") = 500, py::arg("seed") = 0,
      py::arg("tol") = kPositivityTolerance);
  m.def("trotter_approximant", &trotter_approximant);
  m.def("counterexample_f", &counterexample_f);
  m.def("family_check", [](int family, int k, int jprime) {
    const FamilyResult r = family_check(family, k, jprime);
    return py::make_tuple(r.order, r.j, r.value, r.positive);
  });

  m.def(
      "run",
      [](const std::string& command, std::optional<int> n, std::optional<int> sites, std::optional<std::string> spec,
         int k, int j, int samples, std::uint64_t seed, double tol, int family, int kparam, int jprime,
         std::optional<std::vector<double>> t) {
        auto cmd = parse_command(command);
        if (!cmd) throw py::value_error("unknown command '" + command + "'");
        RunConfig c;
        c.command = *cmd;
        c.n = n;
        c.L = sites;
        if (spec) c.spec_path = *spec;
        c.k = k;
        c.j = j;
        c.samples = samples;
        c.seed = seed;
        c.tol = tol;
        c.family = family;
        c.kparam = kparam;
        c.jprime = jprime;
        c.t = t;
        std::ostringstream out;
        std::ostringstream err;
        const int code = run(c, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("command"), py::arg("n") = py::none(), py::arg("L") = py::none(), py::arg("spec") = py::none(),
      py::arg("k") = 32, py::arg("j") = 1, py::arg("samples") = 500, py::arg("seed") = 0,
      py::arg("tol") = kPositivityTolerance, py::arg("family") = 1, py::arg("kparam") = 2, py::arg("jprime") = 1,
      py::arg("t") = py::none());
}
