#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sasakit/errors.hpp"
#include "sasakit/fano.hpp"
#include "sasakit/profile.hpp"
#include "sasakit/reeb.hpp"
#include "sasakit/report.hpp"
#include "sasakit/version.hpp"

namespace py = pybind11;
using namespace sasakit;

namespace {

FanoBaseSpec make_spec_py(const std::vector<std::pair<std::string, int>>& entries,
                          const std::string& label) {
  std::vector<SpectrumEntry> parsed;
  parsed.reserve(entries.size());
  for (const auto& [mu, mult] : entries) {
    parsed.push_back({BigRational::from_string(mu), mult});
  }
  return FanoBaseSpec::make(std::move(parsed), label);
}

ReebSolution solve_py(const FanoBaseSpec& spec, const std::string& tolerance) {
  return solve_reeb_parameter(spec, BigRational::from_string(tolerance));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sasaki-Einstein Reeb parameters and transverse Kahler-Einstein profiles";
  m.attr("__version__") = kVersion;

  py::register_exception<SpecParseError>(m, "SpecParseError", PyExc_ValueError);
  py::register_exception<EigenvalueOutOfRange>(m, "EigenvalueOutOfRange", PyExc_ValueError);
  py::register_exception<EmptySpec>(m, "EmptySpec", PyExc_ValueError);
  py::register_exception<ReebParameterOutOfRange>(m, "ReebParameterOutOfRange", PyExc_ValueError);
  py::register_exception<SolverFailure>(m, "SolverFailure", PyExc_RuntimeError);
  py::register_exception<QuadratureFailure>(m, "QuadratureFailure", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PositivityViolation>(m, "PositivityViolation", PyExc_RuntimeError);

  py::class_<FanoBaseSpec>(m, "FanoBaseSpec")
      .def_property_readonly("label", &FanoBaseSpec::label)
      .def_property_readonly("dimension", &FanoBaseSpec::dimension)
      .def_property_readonly("entries",
                             [](const FanoBaseSpec& s) {
                               std::vector<std::pair<std::string, int>> out;
                               for (const auto& e : s.entries())
                                 out.emplace_back(e.mu.str(), e.multiplicity);
                               return out;
                             })
      .def("to_json", [](const FanoBaseSpec& s) { return s.to_json_string(); })
      .def("__eq__", [](const FanoBaseSpec& a, const FanoBaseSpec& b) { return a == b; })
      .def("__repr__", [](const FanoBaseSpec& s) {
        return "<FanoBaseSpec " + (s.label().empty() ? "(unnamed)" : s.label()) + ", n=" +
               std::to_string(s.dimension()) + ">";
      });

  m.def("make_spec", &make_spec_py, py::arg("entries"), py::arg("label") = "",
        "Build a spec from [(mu_fraction, multiplicity), ...]");
  m.def("product_projective_spaces", &product_projective_spaces, py::arg("dims"),
        py::arg("twists"));
  m.def("grassmannian", &grassmannian, py::arg("k"), py::arg("p"), py::arg("twist"));
  m.def("fermat_hypersurface", &fermat_hypersurface, py::arg("n"));
  m.def("parse_spec_source", &parse_spec_source, py::arg("source"));
  m.def("spec_from_json", [](const std::string& text) { return FanoBaseSpec::from_json_string(text); });

  py::class_<ReebSolution>(m, "ReebSolution")
      .def_property_readonly("spec", [](const ReebSolution& s) { return s.spec; })
      .def_property_readonly("a0", [](const ReebSolution& s) { return s.a0_float; })
      .def_property_readonly("enclosure",
                             [](const ReebSolution& s) {
                               return std::make_pair(s.a0_enclosure.lo.str(),
                                                     s.a0_enclosure.hi.str());
                             })
      .def_property_readonly("regularity",
                             [](const ReebSolution& s) {
                               return s.regularity == Regularity::QuasiRegular
                                          ? "quasi-regular"
                                          : "irregular";
                             })
      .def_property_readonly("a0_exact",
                             [](const ReebSolution& s) -> std::optional<std::string> {
                               if (s.a0_exact) return s.a0_exact->str();
                               return std::nullopt;
                             })
      .def_property_readonly("f_residual", [](const ReebSolution& s) { return s.f_residual; })
      .def_property_readonly("futaki", [](const ReebSolution& s) { return s.futaki_at_zero.str(); })
      .def_property_readonly("p_coefficients",
                             [](const ReebSolution& s) {
                               std::vector<std::string> out;
                               for (const auto& c : s.numerator_poly.coefficients())
                                 out.push_back(c.str());
                               return out;
                             })
      .def("to_json", [](const ReebSolution& s) { return reeb_solution_to_json(s); })
      .def("__repr__", [](const ReebSolution& s) {
        return "<ReebSolution a0=" + std::to_string(s.a0_float) + ">";
      });

  m.def("solve_reeb_parameter", &solve_py, py::arg("spec"),
        py::arg("tolerance") = "1/1000000000000");
  m.def("solution_from_json",
        [](const std::string& text) { return reeb_solution_from_json(text); });
  m.def("futaki_obstruction",
        [](const FanoBaseSpec& spec) { return futaki_obstruction(spec).str(); });
  m.def("futaki_obstruction_float",
        [](const FanoBaseSpec& spec) { return futaki_obstruction(spec).to_double(); });
  m.def("f_value", [](const FanoBaseSpec& spec, const std::string& a) {
    return f_value(spec, BigRational::from_string(a)).str();
  });
  m.def("f_derivative_value", [](const FanoBaseSpec& spec, const std::string& a) {
    return f_derivative_value(spec, BigRational::from_string(a)).str();
  });

  py::class_<ProfileRow>(m, "ProfileRow")
      .def_readonly("rho", &ProfileRow::rho)
      .def_readonly("x", &ProfileRow::x)
      .def_readonly("u", &ProfileRow::u)
      .def_readonly("u_second", &ProfileRow::u_second)
      .def_readonly("ode_residual", &ProfileRow::ode_residual)
      .def_readonly("min_margin", &ProfileRow::min_margin);

  py::class_<ProfileTable>(m, "ProfileTable")
      .def_readonly("a", &ProfileTable::a)
      .def_readonly("quad_tol", &ProfileTable::quad_tol)
      .def_readonly("rows", &ProfileTable::rows);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("measured", &CheckResult::measured)
      .def_readonly("tolerance", &CheckResult::tolerance);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("checks", &VerificationReport::checks)
      .def_readonly("overall", &VerificationReport::overall)
      .def("to_json", [](const VerificationReport& r) { return report_to_json(r); });

  py::class_<ProfileTolerances>(m, "ProfileTolerances")
      .def(py::init<>())
      .def_readwrite("ode_residual", &ProfileTolerances::ode_residual)
      .def_readwrite("a_at_one", &ProfileTolerances::a_at_one);

  m.def("b_value", &b_value, py::arg("spec"), py::arg("a"), py::arg("x"),
        py::arg("quad_tol") = 1e-10);
  m.def("invert_b", &invert_b, py::arg("spec"), py::arg("a"), py::arg("rho"),
        py::arg("tol") = 1e-10);
  m.def("build_profile", &build_profile, py::arg("spec"), py::arg("solution"),
        py::arg("rho_min") = -20.0, py::arg("rho_max") = 20.0, py::arg("steps") = 2001,
        py::arg("quad_tol") = 1e-10);
  m.def("verify_profile", &verify_profile, py::arg("table"), py::arg("solution"),
        py::arg("tolerances") = ProfileTolerances{});

  py::class_<MomentSample>(m, "MomentSample")
      .def_readonly("x", &MomentSample::x)
      .def_readonly("v", &MomentSample::v)
      .def_readonly("v_prime", &MomentSample::v_prime);

  py::class_<MomentData>(m, "MomentData")
      .def_readonly("a", &MomentData::a)
      .def_readonly("interval_lo", &MomentData::interval_lo)
      .def_readonly("interval_hi", &MomentData::interval_hi)
      .def_readonly("samples", &MomentData::samples);

  m.def(
      "moment_function",
      [](double a, const std::vector<double>& xs) {
        return moment_function(a, std::span<const double>(xs.data(), xs.size()));
      },
      py::arg("a"), py::arg("x_samples"));

  py::enum_<Chart>(m, "Chart").value("Plus", Chart::Plus).value("Minus", Chart::Minus);
  m.def("evaluate_fiber_metric", &evaluate_fiber_metric, py::arg("a"), py::arg("z_modulus"),
        py::arg("chart"));
}
