#pragma once

#include <span>
#include <vector>

#include "sasakit/fano.hpp"
#include "sasakit/reeb.hpp"
#include "sasakit/report.hpp"

namespace sasakit {

struct ProfileRow {
  double rho = 0;
  double x = 0;          // x_a(rho), the inverse of B_a
  double u = 0;          // -log A_a(x)
  double u_second = 0;   // -x A_a(x) / A_a'(x); A_a(0) at x = 0
  double ode_residual = 0;
  double min_margin = 0;  // min_k (1 + mu_{k,a} x)
};

// Transverse Kahler-Einstein profile sampled on a uniform rho grid. Rows are
// strictly increasing in rho and x, with x confined to the open moment
// interval (-1/(1+2a), 1).
struct ProfileTable {
  double a = 0;
  double quad_tol = 0;
  std::vector<ProfileRow> rows;
};

struct MomentSample {
  double x = 0;
  double v = 0;
  double v_prime = 0;
};

// Samples of the fiber potential v and the moment map v'; v' increases
// strictly from -1/(1+2a) to 1.
struct MomentData {
  double a = 0;
  double interval_lo = 0;
  double interval_hi = 1;
  std::vector<MomentSample> samples;
};

enum class Chart { Plus, Minus };

struct ProfileTolerances {
  double ode_residual = 0.0;  // 0 selects 100 * quad_tol
  double a_at_one = 1e-9;     // |A(1)| threshold certifying a sits at the root
};

// B_a(x): integral from 0 to x of prod_k (1 + mu_{k,a} s)^{m_k} / A_a(s) ds,
// the pole-free form of -A'/(s A). Adaptive quadrature to absolute accuracy
// quad_tol. Throws DomainError outside the open moment interval and
// QuadratureFailure when the subdivision budget cannot reach quad_tol.
double b_value(const FanoBaseSpec& spec, double a, double x, double quad_tol);

// Monotone inversion of B_a by bracketed Newton/bisection: returns x with
// |B_a(x) - rho| <= tol, strictly inside the open interval. For |rho| large
// enough that the preimage is within one ulp of an endpoint, returns the
// nearest representable interior point.
double invert_b(const FanoBaseSpec& spec, double a, double rho, double tol);

// Uniform grid over [rho_min, rho_max] with the stated number of steps;
// a is the exact rational midpoint of the solution enclosure. Throws
// PositivityViolation if any metric factor margin is non-positive.
ProfileTable build_profile(const FanoBaseSpec& spec, const ReebSolution& solution,
                           double rho_min, double rho_max, int steps, double quad_tol);

// v(x) = 2 log(exp(x/2) + exp(-x/(2(1+2a)))) and its derivative, evaluated
// in log-sum-exp form.
MomentData moment_function(double a, std::span<const double> x_samples);

// Scalar coefficient of the invariant fiber metric G on the chart:
//   Plus:  (|z|^-1 + |z|^{1/(1+2a)})^-2 / |z|^2
//   Minus: (1+2a)^2 (|z|^{1+2a} + |z|^-1)^-2 / |z|^2
double evaluate_fiber_metric(double a, double z_modulus, Chart chart);

// Runs the invariant checks (ODE residual sup, convexity, monotonicity,
// interval confinement, exact A-range and A-slope sampling, positivity
// margins, A(1) = 0) and reports them; failures are entries, not exceptions.
VerificationReport verify_profile(const ProfileTable& table, const ReebSolution& solution,
                                  const ProfileTolerances& tolerances = {});

}  // namespace sasakit
