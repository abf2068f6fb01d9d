// sasakit: solve for the Sasaki-Einstein Reeb parameter of S^1-bundles over
// P^1-bundle compactifications and verify the transverse Kahler-Einstein
// profile. Exit codes: 0 ok, 2 bad input, 3 solver failure, 4 quadrature
// failure, 5 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sasakit/errors.hpp"
#include "sasakit/fano.hpp"
#include "sasakit/profile.hpp"
#include "sasakit/reeb.hpp"
#include "sasakit/report.hpp"
#include "sasakit/version.hpp"

namespace {

using namespace sasakit;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;
constexpr int kExitQuadrature = 4;
constexpr int kExitVerification = 5;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!content.empty() && content.back() != '\n') out << '\n';
}

BigRational parse_tolerance(const std::string& text) {
  BigRational tol;
  try {
    tol = BigRational::from_string(text);
  } catch (const std::invalid_argument&) {
    throw SpecParseError("tolerance must be a fraction string like 1/1000000000000");
  }
  if (tol.sign() <= 0) throw SpecParseError("tolerance must be positive");
  return tol;
}

void print_solution(const ReebSolution& sol, const BigRational& tol) {
  std::printf("spec: %s  (n = %d)\n", sol.spec.label().c_str(), sol.spec.dimension());
  std::printf("a0 = %.17g\n", sol.a0_float);
  std::printf("enclosure = [%s, %s]  (width <= %s)\n", sol.a0_enclosure.lo.str().c_str(),
              sol.a0_enclosure.hi.str().c_str(), tol.str().c_str());
  if (sol.a0_exact) {
    std::printf("regularity: quasi-regular, a0 = %s exactly\n", sol.a0_exact->str().c_str());
  } else {
    std::printf("regularity: irregular (a0 certified irrational)\n");
  }
  std::printf("|F(a0)| = %.3e\n", sol.f_residual);
  std::printf("futaki obstruction at a=0: %s (~%.9g)\n", sol.futaki_at_zero.str().c_str(),
              sol.futaki_at_zero.to_double());
  std::printf("P(a) = %s\n", sol.numerator_poly.str("a").c_str());
}

struct CatalogFamily {
  std::string name;
  std::string grammar;
  std::string description;
  std::string bounds;
  std::string eigenvalues;
  std::string note;  // shown with -v
};

const std::vector<CatalogFamily>& catalog_families() {
  static const std::vector<CatalogFamily> families = {
      {"pp", "pp:n1,n2,../v1,v2,..",
       "product of projective spaces P^{n_i} with L = O(v_1,..,v_l)",
       "-(n_i+1) < v_i < n_i+1", "v_i/(n_i+1) with multiplicity n_i",
       "always toric"},
      {"gr", "gr:k,p,v", "Grassmannian Gr(k,p) with L = A(k,p)^v, A the ample generator",
       "1 <= p <= k-1, -k < v < k", "v/k with multiplicity p(k-p)",
       "non-toric S^1-bundle when 2 <= p <= k-2"},
      {"fermat", "fermat:n",
       "Kahler-Einstein degree-n hypersurface in P^{n+1} with L = O(1)", "n >= 3",
       "1/2 with multiplicity n", "cubic threefold (n=3) is non-rational and non-toric"},
      {"dp1", "dp1", "alias for pp:1/1 (P^2 blown up at one point)", "", "1/2 with multiplicity 1",
       "irregular Reeb field"},
  };
  return families;
}

int cmd_solve(const std::string& source, const std::string& tol_text, const std::string& out_path,
              bool as_json, double inject_bracket_cap) {
  const FanoBaseSpec spec = parse_spec_source(source);
  SolveOptions options;
  options.tolerance = parse_tolerance(tol_text);
  if (inject_bracket_cap > 0) {
    options.upper_cap = BigRational::from_double(inject_bracket_cap);
    options.lower_gap_floor = BigRational::from_double(inject_bracket_cap);
  }
  const ReebSolution sol = solve_reeb_parameter(spec, options);
  const std::string json = reeb_solution_to_json(sol);
  if (!out_path.empty()) write_file(out_path, json);
  if (as_json) {
    std::printf("%s\n", json.c_str());
  } else {
    print_solution(sol, options.tolerance);
    if (!out_path.empty()) std::printf("wrote %s\n", out_path.c_str());
  }
  return kExitOk;
}

int cmd_futaki(const std::string& source, bool as_json) {
  const FanoBaseSpec spec = parse_spec_source(source);
  const BigRational futaki = futaki_obstruction(spec);
  const bool ke = futaki.is_zero();
  if (as_json) {
    nlohmann::ordered_json j;
    j["label"] = spec.label();
    j["futaki"] = {{"exact", futaki.str()}, {"float", futaki.to_double()}};
    j["kahler_einstein"] = ke;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("futaki obstruction: %s (~%.9g)\n", futaki.str().c_str(), futaki.to_double());
    std::printf("KE exists on M = P(L + O_W): %s\n", ke ? "yes" : "no");
  }
  return kExitOk;
}

int cmd_profile(const std::string& source, const std::string& tol_text, const std::string& rho_text,
                int steps, double quad_tol, const std::string& out_path, bool as_json,
                double inject_a_shift) {
  const FanoBaseSpec spec = parse_spec_source(source);

  double rho_min = -20.0, rho_max = 20.0;
  {
    const size_t colon = rho_text.find(':');
    if (colon == std::string::npos) throw SpecParseError("--rho needs the form lo:hi");
    try {
      size_t pos = 0;
      rho_min = std::stod(rho_text.substr(0, colon), &pos);
      rho_max = std::stod(rho_text.substr(colon + 1), &pos);
    } catch (const std::exception&) {
      throw SpecParseError("--rho needs numeric bounds lo:hi");
    }
    if (!(rho_min < rho_max)) throw SpecParseError("--rho needs lo < hi");
  }
  if (steps < 2) throw SpecParseError("--steps must be >= 2");
  if (!(quad_tol > 0)) throw SpecParseError("--quad-tol must be positive");

  ReebSolution sol = solve_reeb_parameter(spec, parse_tolerance(tol_text));
  if (inject_a_shift != 0.0) {
    const BigRational shift = BigRational::from_double(inject_a_shift);
    sol.a0_enclosure.lo += shift;
    sol.a0_enclosure.hi += shift;
    sol.a0_float += inject_a_shift;
  }

  const ProfileTable table = build_profile(spec, sol, rho_min, rho_max, steps, quad_tol);
  const VerificationReport report = verify_profile(table, sol);

  std::ostringstream csv;
  write_profile_csv(csv, table);
  write_file(out_path, csv.str());
  std::string report_path = out_path;
  if (report_path.ends_with(".csv")) report_path.resize(report_path.size() - 4);
  report_path += ".report.json";
  write_file(report_path, report_to_json(report));

  if (as_json) {
    std::printf("%s\n", report_to_json(report).c_str());
  } else {
    std::printf("spec: %s, a0 = %.17g\n", spec.label().c_str(), table.a);
    std::printf("%zu rows over rho in [%g, %g], quad_tol %g\n", table.rows.size(), rho_min,
                rho_max, quad_tol);
    for (const auto& c : report.checks) {
      std::printf("  %-26s %s  (measured %s, tolerance %g)\n", c.name.c_str(),
                  c.passed ? "pass" : "FAIL", c.measured.c_str(), c.tolerance);
    }
    std::printf("overall: %s\n", report.overall ? "pass" : "FAIL");
    std::printf("wrote %s and %s\n", out_path.c_str(), report_path.c_str());
  }
  return report.overall ? kExitOk : kExitVerification;
}

int cmd_catalog(bool as_json, bool verbose) {
  if (as_json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& f : catalog_families()) {
      nlohmann::ordered_json e;
      e["name"] = f.name;
      e["grammar"] = f.grammar;
      e["description"] = f.description;
      e["bounds"] = f.bounds;
      e["eigenvalues"] = f.eigenvalues;
      if (verbose) e["note"] = f.note;
      j.push_back(std::move(e));
    }
    std::printf("%s\n", j.dump(2).c_str());
    return kExitOk;
  }
  std::printf("built-in spec families:\n");
  for (const auto& f : catalog_families()) {
    std::printf("  %-22s %s\n", f.grammar.c_str(), f.description.c_str());
    if (!f.bounds.empty()) std::printf("  %-22s requires %s\n", "", f.bounds.c_str());
    std::printf("  %-22s eigenvalues %s\n", "", f.eigenvalues.c_str());
    if (verbose && !f.note.empty()) std::printf("  %-22s %s\n", "", f.note.c_str());
  }
  std::printf("  %-22s spec file {\"label\": str, \"entries\": [{\"mu\": \"p/q\", \"multiplicity\": k}]}\n",
              "<path.json>");
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Sasaki-Einstein Reeb parameters and transverse Kahler-Einstein profiles"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string source, tol_text = "1/1000000000000", out_path, rho_text = "-20:20";
  int steps = 2001;
  double quad_tol = 1e-10;
  bool as_json = false, verbose = false;
  double inject_bracket_cap = 0.0, inject_a_shift = 0.0;

  auto* solve = app.add_subcommand("solve", "compute the Reeb parameter a0 for a spec");
  solve->add_option("spec", source, "spec source (pp:../.., gr:k,p,v, fermat:n, dp1, or JSON path)")
      ->required();
  solve->add_option("--tol", tol_text, "enclosure width as an exact fraction");
  solve->add_option("--out", out_path, "write the result JSON to this path");
  solve->add_flag("--json", as_json, "print JSON instead of a summary");
  solve->add_option("--inject-bracket-cap", inject_bracket_cap)->group("");

  auto* futaki = app.add_subcommand("futaki", "evaluate the Futaki obstruction integral");
  futaki->add_option("spec", source, "spec source")->required();
  futaki->add_flag("--json", as_json, "print JSON instead of a summary");

  auto* profile = app.add_subcommand("profile", "build and verify the transverse KE profile");
  profile->add_option("spec", source, "spec source")->required();
  profile->add_option("--tol", tol_text, "solver enclosure width (exact fraction)");
  profile->add_option("--rho", rho_text, "grid range lo:hi");
  profile->add_option("--steps", steps, "number of grid rows (>= 2)");
  profile->add_option("--quad-tol", quad_tol, "absolute quadrature/inversion tolerance");
  profile->add_option("--out", out_path, "CSV output path")->default_str("profile.csv");
  profile->add_flag("--json", as_json, "print the verification report JSON");
  profile->add_option("--inject-a-shift", inject_a_shift)->group("");

  auto* catalog = app.add_subcommand("catalog", "list the built-in spec families");
  catalog->add_flag("--json", as_json, "machine-readable listing");
  catalog->add_flag("-v,--verbose", verbose, "include toricity notes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (solve->parsed()) return cmd_solve(source, tol_text, out_path, as_json, inject_bracket_cap);
  if (futaki->parsed()) return cmd_futaki(source, as_json);
  if (profile->parsed()) {
    if (out_path.empty()) out_path = "profile.csv";
    return cmd_profile(source, tol_text, rho_text, steps, quad_tol, out_path, as_json,
                       inject_a_shift);
  }
  return cmd_catalog(as_json, verbose);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SolverFailure& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kExitSolver;
  } catch (const QuadratureFailure& e) {
    std::fprintf(stderr, "quadrature failure: %s\n", e.what());
    return kExitQuadrature;
  } catch (const PositivityViolation& e) {
    std::fprintf(stderr, "verification failure: %s\n", e.what());
    return kExitVerification;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
