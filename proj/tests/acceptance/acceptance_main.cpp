// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line each. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sasakit/errors.hpp"
#include "sasakit/fano.hpp"
#include "sasakit/profile.hpp"
#include "sasakit/reeb.hpp"

using namespace sasakit;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= time_limit_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("[%s] %2d. %-34s (%.2f s%s%s)\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              elapsed, detail.empty() ? "" : "; ", detail.c_str());
  if (!ok) ++failures;
}

std::mt19937 acceptance_rng(424243u);

long rand_int(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(acceptance_rng);
}

BigRational random_mu() {
  const long den = rand_int(2, 40);
  const long cap = (3 * den - 1) / 4;
  return BigRational(rand_int(-cap, cap), den);
}

FanoBaseSpec random_spec() {
  const int n = static_cast<int>(rand_int(1, 5));
  std::vector<SpectrumEntry> entries;
  int left = n;
  while (left > 0) {
    const int mult = static_cast<int>(rand_int(1, left));
    entries.push_back({random_mu(), mult});
    left -= mult;
  }
  return FanoBaseSpec::make(std::move(entries), "random acceptance spec");
}

std::vector<FanoBaseSpec> randomized_specs() {
  std::vector<FanoBaseSpec> specs;
  for (int i = 0; i < 20; ++i) specs.push_back(random_spec());
  return specs;
}

bool golden_root(std::string& detail) {
  const auto spec = FanoBaseSpec::make({{BigRational(1, 2), 1}});
  const auto sol = solve_reeb_parameter(spec);
  const double reference = (-5.0 + std::sqrt(13.0)) / 12.0;
  const double err = std::abs(sol.a0_float - reference);
  const auto division =
      divmod(sol.numerator_poly, RationalPoly({BigRational(1), BigRational(10), BigRational(12)}));
  char buf[128];
  std::snprintf(buf, sizeof buf, "|a0 - (-5+sqrt(13))/12| = %.2e", err);
  detail = buf;
  return err <= 1e-12 && division.remainder.is_zero() && sol.regularity == Regularity::Irregular;
}

bool trivial_symmetry(std::string& detail) {
  for (int n = 1; n <= 6; ++n) {
    const auto spec = FanoBaseSpec::make({{BigRational(0), n}});
    const auto sol = solve_reeb_parameter(spec);
    if (sol.regularity != Regularity::QuasiRegular || !sol.a0_exact ||
        !sol.a0_exact->is_zero() || !futaki_obstruction(spec).is_zero()) {
      detail = "n = " + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool oracle_agreement(std::string& detail) {
  const BigRational tol(1, 1000000000000L);
  double worst = 0;
  for (const auto& spec : randomized_specs()) {
    const auto sol = solve_reeb_parameter(spec, tol);
    const auto poly_enc = isolate_reeb_root_from_poly(spec, tol);
    const double gap =
        std::abs(sol.a0_enclosure.midpoint().to_double() - poly_enc.midpoint().to_double());
    worst = std::max(worst, gap);
    if (gap > 1e-10 || !sol.a0_enclosure.intersects(poly_enc)) {
      detail = "midpoint gap " + std::to_string(gap);
      return false;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "20 specs, worst route gap %.2e", worst);
  detail = buf;
  return true;
}

bool monotonicity(std::string& detail) {
  for (const auto& spec : randomized_specs()) {
    BigRational a(-2, 5);
    BigRational prev = f_value(spec, a);
    if (f_derivative_value(spec, a).sign() <= 0) return false;
    for (int k = 1; k < 10; ++k) {
      a += BigRational(27, 50);
      const BigRational next = f_value(spec, a);
      if (!(prev < next) || f_derivative_value(spec, a).sign() <= 0) {
        detail = "violation at a = " + a.str();
        return false;
      }
      prev = next;
    }
  }
  return true;
}

bool ode_residual(std::string& detail) {
  const auto spec = FanoBaseSpec::make({{BigRational(1, 2), 1}});
  const auto sol = solve_reeb_parameter(spec);
  const auto table = build_profile(spec, sol, -20.0, 20.0, 2001, 1e-10);
  const double lo = -1.0 / (1.0 + 2.0 * table.a);
  double sup = 0;
  for (size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    sup = std::max(sup, std::abs(r.ode_residual));
    if (r.min_margin <= 0 || r.x <= lo || r.x >= 1.0) return false;
    if (i > 0 && r.x <= table.rows[i - 1].x) return false;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "sup residual %.2e", sup);
  detail = buf;
  return sup <= 1e-8 && table.rows.size() == 2001;
}

bool moment_image(std::string& detail) {
  const auto sol = solve_reeb_parameter(FanoBaseSpec::make({{BigRational(1, 2), 1}}));
  const double a0 = sol.a0_float;
  std::vector<double> xs = {50.0, -50.0};
  const auto ends = moment_function(a0, xs);
  const double err_hi = std::abs(ends.samples[0].v_prime - 1.0);
  const double err_lo = std::abs(ends.samples[1].v_prime - ends.interval_lo);

  std::vector<double> grid;
  for (int i = 0; i < 200; ++i) grid.push_back(-20.0 + 40.0 * i / 199.0);
  const auto md = moment_function(a0, grid);
  for (size_t i = 1; i < md.samples.size(); ++i) {
    if (md.samples[i].v_prime <= md.samples[i - 1].v_prime) {
      detail = "v' not strictly increasing";
      return false;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "endpoint gaps %.2e / %.2e", err_hi, err_lo);
  detail = buf;
  return err_hi <= 1e-6 && err_lo <= 1e-6;
}

bool chart_consistency(std::string& detail) {
  const auto sol = solve_reeb_parameter(FanoBaseSpec::make({{BigRational(1, 2), 1}}));
  double worst = 0;
  for (double a : {0.0, sol.a0_float, 0.5}) {
    const double q = 1.0 + 2.0 * a;
    for (int i = 0; i < 100; ++i) {
      const double s = std::pow(10.0, -3.0 + 6.0 * i / 99.0);
      const double zp = std::pow(s, -q);
      const double lhs = evaluate_fiber_metric(a, zp, Chart::Plus) * q * q * zp * zp / (s * s);
      const double rhs = evaluate_fiber_metric(a, s, Chart::Minus);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst relative gap %.2e", worst);
  detail = buf;
  return worst <= 1e-12;
}

bool futaki_equivalence(std::string& detail) {
  for (const auto& spec : randomized_specs()) {
    if (futaki_obstruction(spec) != f_value(spec, BigRational(0))) {
      detail = "futaki != F(0)";
      return false;
    }
  }
  for (int i = 0; i < 10; ++i) {
    BigRational mu = random_mu().abs();
    if (mu.is_zero()) mu = BigRational(1, 3);
    const auto spec = FanoBaseSpec::make({{mu, 1}, {-mu, 1}});
    if (!futaki_obstruction(spec).is_zero()) {
      detail = "antisymmetric spec with nonzero obstruction, mu = " + mu.str();
      return false;
    }
  }
  return true;
}

bool catalog_correctness(std::string& detail) {
  if (!(grassmannian(4, 2, 1) == FanoBaseSpec::make({{BigRational(1, 4), 4}}))) {
    detail = "gr:4,2,1";
    return false;
  }
  if (!(fermat_hypersurface(3) == FanoBaseSpec::make({{BigRational(1, 2), 3}}))) {
    detail = "fermat:3";
    return false;
  }
  for (int n : {1, 2, 3}) {
    try {
      product_projective_spaces({n}, {n + 1});
      detail = "twist n+1 accepted for n = " + std::to_string(n);
      return false;
    } catch (const EigenvalueOutOfRange&) {
    }
  }
  return true;
}

bool finite_difference_orders(std::string& detail) {
  const auto spec = FanoBaseSpec::make({{BigRational(1, 2), 1}});
  const auto sol = solve_reeb_parameter(spec);
  const BigRational a_rat = sol.a0_enclosure.midpoint();
  const double a = a_rat.to_double();
  const double tol = 1e-14;
  const auto x_of = [&](double rho) { return invert_b(spec, a, rho, tol); };
  const auto u_of = [&](double rho) {
    return -std::log(a_value(spec, a_rat, BigRational::from_double(x_of(rho))).to_double());
  };
  const auto u2_of = [&](double rho) {
    const double x = x_of(rho);
    const double ax = a_value(spec, a_rat, BigRational::from_double(x)).to_double();
    const double apx = -integrand_poly(spec, a_rat).eval_double(x);
    return x == 0.0 ? ax : -x * ax / apx;
  };

  double rms_u[2] = {0, 0}, rms_x[2] = {0, 0};
  const double hs[2] = {1e-3, 1e-4};
  int count = 0;
  for (double rho = -3.0; rho <= 3.0001; rho += 0.3, ++count) {
    for (int k = 0; k < 2; ++k) {
      const double h = hs[k];
      const double eu = (u_of(rho + h) - u_of(rho - h)) / (2 * h) - x_of(rho);
      const double ex = (x_of(rho + h) - x_of(rho - h)) / (2 * h) - u2_of(rho);
      rms_u[k] += eu * eu;
      rms_x[k] += ex * ex;
    }
  }
  for (int k = 0; k < 2; ++k) {
    rms_u[k] = std::sqrt(rms_u[k] / count);
    rms_x[k] = std::sqrt(rms_x[k] / count);
  }
  const double order_u = std::log10(rms_u[0] / rms_u[1]);
  const double order_x = std::log10(rms_x[0] / rms_x[1]);
  char buf[96];
  std::snprintf(buf, sizeof buf, "orders u' %.3f, x' %.3f", order_u, order_x);
  detail = buf;
  return order_u >= 1.9 && order_x >= 1.9;
}

}  // namespace

int main() {
  std::printf("acceptance criteria:\n");
  criterion(1, "golden root (del Pezzo)", 1.0, golden_root);
  criterion(2, "trivial symmetry a0 = 0", 1.0, trivial_symmetry);
  criterion(3, "independent-oracle agreement", 30.0, oracle_agreement);
  criterion(4, "exact monotonicity of F", 30.0, monotonicity);
  criterion(5, "ODE residual on [-20,20]", 60.0, ode_residual);
  criterion(6, "moment image endpoints", 10.0, moment_image);
  criterion(7, "chart consistency of G", 10.0, chart_consistency);
  criterion(8, "futaki criterion equivalence", 10.0, futaki_equivalence);
  criterion(9, "catalog correctness", 10.0, catalog_correctness);
  criterion(10, "finite-difference orders", 60.0, finite_difference_orders);
  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures;
}
