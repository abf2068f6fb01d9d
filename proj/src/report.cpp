#include "sasakit/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "sasakit/errors.hpp"
#include "sasakit/profile.hpp"
#include "sasakit/reeb.hpp"
#include "sasakit/version.hpp"

namespace sasakit {

VerificationReport VerificationReport::build(std::vector<CheckResult> checks, std::string label,
                                             std::string enclosure_lo, std::string enclosure_hi) {
  VerificationReport r;
  r.checks = std::move(checks);
  r.overall = true;
  for (const auto& c : r.checks) r.overall = r.overall && c.passed;
  r.label = std::move(label);
  r.a0_enclosure_lo = std::move(enclosure_lo);
  r.a0_enclosure_hi = std::move(enclosure_hi);
  r.tool_version = kVersion;
  return r;
}

std::string report_to_json(const VerificationReport& report, int indent) {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"status", c.passed ? "pass" : "fail"},
                           {"measured", c.measured},
                           {"tolerance", c.tolerance}});
  }
  j["overall"] = report.overall ? "pass" : "fail";
  j["provenance"] = {{"label", report.label},
                     {"a0_enclosure", {report.a0_enclosure_lo, report.a0_enclosure_hi}},
                     {"tool_version", report.tool_version}};
  return j.dump(indent);
}

std::string reeb_solution_to_json(const ReebSolution& s, int indent) {
  nlohmann::ordered_json j;
  j["label"] = s.spec.label();
  nlohmann::ordered_json a0;
  a0["float"] = s.a0_float;
  a0["enclosure"] = {s.a0_enclosure.lo.str(), s.a0_enclosure.hi.str()};
  a0["regularity"] = s.regularity == Regularity::QuasiRegular ? "quasi-regular" : "irregular";
  if (s.a0_exact) a0["exact"] = s.a0_exact->str();
  j["a0"] = std::move(a0);
  j["futaki"] = {{"exact", s.futaki_at_zero.str()}, {"float", s.futaki_at_zero.to_double()}};
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : s.numerator_poly.coefficients()) coeffs.push_back(c.str());
  j["P_coeffs"] = std::move(coeffs);
  j["f_residual"] = s.f_residual;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : s.spec.entries()) {
    entries.push_back({{"mu", e.mu.str()}, {"multiplicity", e.multiplicity}});
  }
  j["spec_entries"] = std::move(entries);
  return j.dump(indent);
}

ReebSolution reeb_solution_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecParseError(std::string("invalid solution JSON: ") + e.what());
  }
  try {
    ReebSolution s;
    std::vector<SpectrumEntry> entries;
    for (const auto& e : j.at("spec_entries")) {
      entries.push_back({BigRational::from_string(e.at("mu").get<std::string>()),
                         e.at("multiplicity").get<int>()});
    }
    s.spec = FanoBaseSpec::make(std::move(entries), j.at("label").get<std::string>());
    const auto& a0 = j.at("a0");
    s.a0_float = a0.at("float").get<double>();
    s.a0_enclosure = {BigRational::from_string(a0.at("enclosure").at(0).get<std::string>()),
                      BigRational::from_string(a0.at("enclosure").at(1).get<std::string>())};
    s.regularity = a0.at("regularity").get<std::string>() == "quasi-regular"
                       ? Regularity::QuasiRegular
                       : Regularity::Irregular;
    if (a0.contains("exact")) s.a0_exact = BigRational::from_string(a0.at("exact").get<std::string>());
    s.futaki_at_zero = BigRational::from_string(j.at("futaki").at("exact").get<std::string>());
    std::vector<BigRational> coeffs;
    for (const auto& c : j.at("P_coeffs")) coeffs.push_back(BigRational::from_string(c.get<std::string>()));
    s.numerator_poly = RationalPoly(std::move(coeffs));
    s.f_residual = j.at("f_residual").get<double>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw SpecParseError(std::string("solution JSON missing fields: ") + e.what());
  }
}

void write_profile_csv(std::ostream& os, const ProfileTable& table) {
  os << "rho,x,u,u_second,ode_residual,min_margin\n";
  char buf[256];
  for (const auto& r : table.rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.rho, r.x, r.u,
                  r.u_second, r.ode_residual, r.min_margin);
    os << buf;
  }
}

}  // namespace sasakit
