// Python bindings. Rationals cross the boundary as "num/den" strings; structured
// results reuse the JSON documents of the command-line tool.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nqh/error.hpp"
#include "nqh/param_io.hpp"
#include "nqh/report.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> coeffs(const nqh::UniPoly& f) {
  std::vector<std::string> out;
  if (!f.degree()) return out;
  for (int i = 0; i <= *f.degree(); ++i) out.push_back(nqh::to_string(f.coeff(i)));
  return out;
}

nqh::UniPoly poly(const std::vector<std::string>& cs) {
  std::vector<nqh::Rational> v;
  for (const auto& c : cs) v.push_back(nqh::parse_rational(c));
  return nqh::UniPoly(v);
}

nqh::ParameterPoint point(const std::string& text) {
  nqh::ParameterPoint p = nqh::read_parameters(text);
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_nqh, m) {
  auto invalid = py::register_exception<nqh::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<nqh::UnsupportedRange>(m, "UnsupportedRange", PyExc_ValueError);
  py::register_exception<nqh::InvalidParameters>(m, "InvalidParameters", invalid.ptr());
  py::register_exception<nqh::InternalConsistency>(m, "InternalConsistency", PyExc_RuntimeError);

  m.def("dimension", &nqh::dimension, py::arg("M"), py::arg("N"));
  m.def("max_level", &nqh::max_level, py::arg("M"), py::arg("N"));
  m.def(
      "basis_json",
      [](int M, int N) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& b : nqh::enumerate_basis(M, N)) rows.push_back(nqh::to_json(b));
        return rows.dump();
      },
      py::arg("M"), py::arg("N"));
  m.def(
      "parameter_indices",
      [](int M, int N) {
        std::vector<std::string> out;
        for (const auto& p : nqh::parameter_indices(M, N)) out.push_back(nqh::to_string(p));
        return out;
      },
      py::arg("M"), py::arg("N"));
  m.def(
      "sample_parameters",
      [](int M, int N, std::uint64_t seed) { return nqh::write_parameters(nqh::sample_generic_parameters(M, N, seed)); },
      py::arg("M"), py::arg("N"), py::arg("seed"), "Parameter file text of the seeded generic point.");
  m.def(
      "normal_form",
      [](const std::string& params) {
        nqh::ParameterPoint p = point(params);
        std::vector<std::string> factors;
        for (const auto& f : nqh::normal_form_factors(p)) factors.push_back(f.to_string());
        return py::make_tuple(factors, nqh::build_normal_form(p).to_string());
      },
      py::arg("params"), "(factors, expanded) for a parameter file text.");
  m.def(
      "strict_transform",
      [](const std::string& params, const std::string& chart) {
        auto st = nqh::strict_transform_factorization(point(params), nqh::parse_chart(chart));
        return py::make_tuple(st.exc_x, st.exc_y, st.rest.to_string());
      },
      py::arg("params"), py::arg("chart"));
  m.def(
      "bezout",
      [](const std::vector<std::string>& F) {
        nqh::BezoutData b = nqh::bezout_cofactors(poly(F));
        py::dict d;
        d["F"] = coeffs(b.F);
        d["G"] = coeffs(b.G);
        d["S"] = coeffs(b.S);
        d["W"] = coeffs(b.W);
        d["Z"] = coeffs(b.Z);
        return d;
      },
      py::arg("F"), "Cofactors of F against F', coefficients in increasing degree.");
  m.def(
      "matrix_json",
      [](const std::string& params, std::uint64_t seed, std::optional<int> level) {
        nqh::ParameterPoint p = point(params);
        py::gil_scoped_release release;
        return nqh::build_matrix_report(p, seed, level).to_json().dump();
      },
      py::arg("params"), py::arg("seed") = 0, py::arg("level") = py::none());
  m.def(
      "verify_json",
      [](int M, int N, std::uint64_t seed, int trials) {
        py::gil_scoped_release release;
        return nqh::run_verification(M, N, seed, nqh::VerifyOptions{trials}).to_json().dump();
      },
      py::arg("M"), py::arg("N"), py::arg("seed") = 1, py::arg("trials") = 3);
}
