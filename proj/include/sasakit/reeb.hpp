#pragma once

#include <optional>

#include "sasakit/fano.hpp"
#include "sasakit/poly.hpp"
#include "sasakit/roots.hpp"

namespace sasakit {

// A Sasaki structure is quasi-regular exactly when the Reeb parameter a_0 is
// rational; the classification is certified through the numerator polynomial.
enum class Regularity { QuasiRegular, Irregular };

struct ReebSolution {
  FanoBaseSpec spec;
  // Exact rational bracket of a_0 with a strict sign change of F at its
  // endpoints; width <= the requested tolerance.
  RationalInterval a0_enclosure{BigRational(0), BigRational(0)};
  // Newton-polished double inside the enclosure.
  double a0_float = 0.0;
  // P(a) = (1+2a)^(n+2) F(a); its unique root above -1/2 is a_0.
  RationalPoly numerator_poly;
  Regularity regularity = Regularity::Irregular;
  std::optional<BigRational> a0_exact;  // present iff quasi-regular
  // |F(a0_float)| through exact evaluation at the dyadic value.
  double f_residual = 0.0;
  BigRational futaki_at_zero{0};
};

// The shifted eigenvalue mu + a(1 + mu).
BigRational mu_shift(const BigRational& mu, const BigRational& a);

// Lower endpoint -1/(1+2a) of the moment interval.
// Throws ReebParameterOutOfRange unless a > -1/2.
BigRational moment_lower_endpoint(const BigRational& a);

// f(x; a) = x prod_k (1 + mu_{k,a} x)^{m_k}, as an exact polynomial in x.
RationalPoly integrand_poly(const FanoBaseSpec& spec, const BigRational& a);

// A_a(x) = -integral of f(s; a) ds from -1/(1+2a) to x, exactly.
BigRational a_value(const FanoBaseSpec& spec, const BigRational& a, const BigRational& x);

// F(a) = integral of f(x; a) over the moment interval (= -A_a(1)), exactly.
BigRational f_value(const FanoBaseSpec& spec, const BigRational& a);

// F'(a), exactly, as the integral of the a-partial of f plus the boundary
// term -2/(1+2a)^2 * f(-1/(1+2a); a) from the moving lower endpoint.
// Strictly positive for every valid spec and a.
BigRational f_derivative_value(const FanoBaseSpec& spec, const BigRational& a);

// P(a) = (1+2a)^(n+2) F(a), expanded symbolically in a (degree 2n+2).
RationalPoly exact_numerator_poly(const FanoBaseSpec& spec);

// The obstruction integral over [-1, 1] of x prod_k (1 + mu_k x)^{m_k}.
// Zero exactly when the P^1-bundle compactification admits a
// Kahler-Einstein metric; equals f_value(spec, 0).
BigRational futaki_obstruction(const FanoBaseSpec& spec);

struct RegularityResult {
  Regularity kind;
  std::optional<BigRational> exact_root;
};

// Certifies whether the unique root of the numerator polynomial inside the
// enclosure is rational.
RegularityResult classify_regularity(const RationalPoly& numerator,
                                     const RationalInterval& enclosure);

// Independent root path: isolates the unique root of P(a) on (-1/2, inf)
// and refines it to the given width. Throws SolverFailure if the isolation
// does not produce exactly one root (an internal defect).
RationalInterval isolate_reeb_root_from_poly(const FanoBaseSpec& spec,
                                             const BigRational& width);

const BigRational& default_reeb_tolerance();  // 1/10^12

struct SolveOptions {
  BigRational tolerance = default_reeb_tolerance();
  // Bracket-expansion guards; the root always exists, so hitting a cap is a
  // defect surfaced as SolverFailure. Exposed for fault injection in tests.
  BigRational upper_cap = BigRational(1000000L);
  BigRational lower_gap_floor = BigRational(1, 1000000000L);
};

// Finds the unique a_0 > -1/2 with F(a_0) = 0 by exact outward bracketing
// from 0 followed by exact bisection, cross-checks against the independent
// P(a) root isolation, classifies regularity, and Newton-polishes a double
// value without leaving the enclosure.
ReebSolution solve_reeb_parameter(const FanoBaseSpec& spec, const SolveOptions& options);
ReebSolution solve_reeb_parameter(const FanoBaseSpec& spec,
                                  const BigRational& tolerance = default_reeb_tolerance());

}  // namespace sasakit
