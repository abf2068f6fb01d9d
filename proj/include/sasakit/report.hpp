#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sasakit {

struct ProfileTable;
struct ReebSolution;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string measured;  // numeric rendering or exact fraction
  double tolerance = 0.0;
};

// Machine-readable record of the invariant checks run against a profile.
// overall is pass exactly when every check passed.
struct VerificationReport {
  std::vector<CheckResult> checks;
  bool overall = false;
  // provenance
  std::string label;
  std::string a0_enclosure_lo;  // exact fraction strings
  std::string a0_enclosure_hi;
  std::string tool_version;

  static VerificationReport build(std::vector<CheckResult> checks, std::string label,
                                  std::string enclosure_lo, std::string enclosure_hi);
};

std::string report_to_json(const VerificationReport& report, int indent = 2);

// Result JSON: {label, a0:{float, enclosure:[lo,hi], regularity, exact?},
// futaki:{exact,float}, P_coeffs:[...], f_residual, spec_entries:[...]}.
// Exact quantities serialize as fraction strings; floats are convenience
// copies. Serialization is deterministic, and from_json reconstructs a
// solution that re-serializes byte-identically.
std::string reeb_solution_to_json(const ReebSolution& solution, int indent = 2);
ReebSolution reeb_solution_from_json(std::string_view text);

// CSV with the fixed header rho,x,u,u_second,ode_residual,min_margin.
void write_profile_csv(std::ostream& os, const ProfileTable& table);

}  // namespace sasakit
