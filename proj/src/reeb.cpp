#include "sasakit/reeb.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "sasakit/errors.hpp"

namespace sasakit {

namespace {

void require_valid_reeb_parameter(const BigRational& a) {
  if (BigRational(2) * a + BigRational(1) <= BigRational(0)) {
    throw ReebParameterOutOfRange("Reeb parameter a = " + a.str() + " must exceed -1/2");
  }
}

}  // namespace

BigRational mu_shift(const BigRational& mu, const BigRational& a) {
  return mu + a * (BigRational(1) + mu);
}

BigRational moment_lower_endpoint(const BigRational& a) {
  require_valid_reeb_parameter(a);
  return -(BigRational(1) + BigRational(2) * a).reciprocal();
}

RationalPoly integrand_poly(const FanoBaseSpec& spec, const BigRational& a) {
  require_valid_reeb_parameter(a);
  RationalPoly f = RationalPoly::monomial(BigRational(1), 1);
  for (const auto& e : spec.entries()) {
    const RationalPoly factor({BigRational(1), mu_shift(e.mu, a)});
    f = f * pow(factor, static_cast<unsigned>(e.multiplicity));
  }
  return f;
}

BigRational a_value(const FanoBaseSpec& spec, const BigRational& a, const BigRational& x) {
  const RationalPoly phi = integrand_poly(spec, a).antiderivative();
  return phi.eval(moment_lower_endpoint(a)) - phi.eval(x);
}

BigRational f_value(const FanoBaseSpec& spec, const BigRational& a) {
  const RationalPoly phi = integrand_poly(spec, a).antiderivative();
  return phi.eval(BigRational(1)) - phi.eval(moment_lower_endpoint(a));
}

BigRational f_derivative_value(const FanoBaseSpec& spec, const BigRational& a) {
  require_valid_reeb_parameter(a);
  const auto& entries = spec.entries();

  // d/da of x prod (1 + mu_{k,a} x)^{m_k}: each distinct eigenvalue
  // contributes m_k (1+mu_k) x^2 (1 + mu_{k,a} x)^{m_k - 1} times the other
  // factors.
  RationalPoly dfda;
  for (size_t k = 0; k < entries.size(); ++k) {
    RationalPoly term = RationalPoly::monomial(
        BigRational(entries[k].multiplicity) * (BigRational(1) + entries[k].mu), 2);
    for (size_t j = 0; j < entries.size(); ++j) {
      const RationalPoly factor({BigRational(1), mu_shift(entries[j].mu, a)});
      const unsigned e = static_cast<unsigned>(entries[j].multiplicity) - (j == k ? 1u : 0u);
      term = term * pow(factor, e);
    }
    dfda += term;
  }

  const BigRational lower = moment_lower_endpoint(a);
  const RationalPoly psi = dfda.antiderivative();
  const BigRational integral_term = psi.eval(BigRational(1)) - psi.eval(lower);

  const BigRational one_plus_2a = BigRational(1) + BigRational(2) * a;
  const BigRational boundary_term =
      BigRational(-2) / (one_plus_2a * one_plus_2a) * integrand_poly(spec, a).eval(lower);

  return integral_term + boundary_term;
}

RationalPoly exact_numerator_poly(const FanoBaseSpec& spec) {
  const int n = spec.dimension();

  // f(x; a) as a polynomial in x whose coefficients are polynomials in a.
  std::vector<RationalPoly> fx = {RationalPoly(), RationalPoly::constant(BigRational(1))};
  for (const auto& e : spec.entries()) {
    const RationalPoly shifted({e.mu, BigRational(1) + e.mu});  // mu_{k,a} in a
    for (int m = 0; m < e.multiplicity; ++m) {
      std::vector<RationalPoly> next(fx.size() + 1);
      for (size_t i = 0; i < fx.size(); ++i) {
        next[i] += fx[i];
        next[i + 1] += fx[i] * shifted;
      }
      fx = std::move(next);
    }
  }

  // Antiderivative in x: Phi_i = fx_{i-1}/i for i = 1..n+2 (fx has no
  // constant term). With the lower endpoint -1/(1+2a),
  //   P(a) = (1+2a)^{n+2} Phi(1) - sum_i (-1)^i Phi_i (1+2a)^{n+2-i},
  // which clears every denominator.
  const RationalPoly one_plus_2a({BigRational(1), BigRational(2)});
  std::vector<RationalPoly> phi(n + 3);
  RationalPoly phi_at_one;
  for (int i = 1; i <= n + 2; ++i) {
    phi[i] = BigRational(1, i) * fx[i - 1];
    phi_at_one += phi[i];
  }
  RationalPoly p = pow(one_plus_2a, static_cast<unsigned>(n + 2)) * phi_at_one;
  for (int i = 1; i <= n + 2; ++i) {
    const RationalPoly t = pow(one_plus_2a, static_cast<unsigned>(n + 2 - i)) * phi[i];
    if (i % 2 == 0) {
      p -= t;
    } else {
      p += t;
    }
  }
  return p;
}

BigRational futaki_obstruction(const FanoBaseSpec& spec) {
  // Unshifted integrand over the symmetric interval [-1, 1].
  RationalPoly g = RationalPoly::monomial(BigRational(1), 1);
  for (const auto& e : spec.entries()) {
    g = g * pow(RationalPoly({BigRational(1), e.mu}), static_cast<unsigned>(e.multiplicity));
  }
  const RationalPoly gi = g.antiderivative();
  return gi.eval(BigRational(1)) - gi.eval(BigRational(-1));
}

RegularityResult classify_regularity(const RationalPoly& numerator,
                                     const RationalInterval& enclosure) {
  if (auto root = rational_root_test(numerator, enclosure)) {
    return {Regularity::QuasiRegular, std::move(root)};
  }
  return {Regularity::Irregular, std::nullopt};
}

RationalInterval isolate_reeb_root_from_poly(const FanoBaseSpec& spec, const BigRational& width) {
  const RationalPoly p = exact_numerator_poly(spec);
  const auto enclosures = isolate_real_roots(p, BigRational(-1, 2), std::nullopt, width);
  if (enclosures.size() != 1) {
    throw SolverFailure("numerator polynomial has " + std::to_string(enclosures.size()) +
                        " isolated roots above -1/2; expected exactly one");
  }
  return enclosures.front();
}

const BigRational& default_reeb_tolerance() {
  static const BigRational tol(1, 1000000000000L);
  return tol;
}

namespace {

// Exact sign-change bracket [lo, hi] with F(lo) < 0 < F(hi), or the exact
// root when an evaluation hits zero.
struct Bracket {
  BigRational lo, hi;
  std::optional<BigRational> exact_root;
};

Bracket bracket_root(const FanoBaseSpec& spec, const SolveOptions& opt) {
  const BigRational zero(0);
  const BigRational f0 = f_value(spec, zero);
  if (f0.is_zero()) return {zero, zero, zero};

  if (f0.sign() < 0) {
    // Root to the right of 0: double outward.
    BigRational lo = zero;
    BigRational hi(1);
    while (hi <= opt.upper_cap) {
      const BigRational fhi = f_value(spec, hi);
      if (fhi.is_zero()) return {lo, hi, hi};
      if (fhi.sign() > 0) return {std::move(lo), std::move(hi), std::nullopt};
      lo = hi;
      hi = BigRational(2) * hi;
    }
    throw SolverFailure("no sign change of F up to a = " + opt.upper_cap.str());
  }

  // Root in (-1/2, 0): halve the gap to -1/2.
  BigRational hi = zero;
  BigRational gap(1, 4);
  while (gap >= opt.lower_gap_floor) {
    const BigRational lo = BigRational(-1, 2) + gap;
    const BigRational flo = f_value(spec, lo);
    if (flo.is_zero()) return {lo, hi, lo};
    if (flo.sign() < 0) return {lo, std::move(hi), std::nullopt};
    hi = lo;
    gap = gap / BigRational(2);
  }
  throw SolverFailure("no sign change of F down to -1/2 + " + opt.lower_gap_floor.str());
}

}  // namespace

ReebSolution solve_reeb_parameter(const FanoBaseSpec& spec, const SolveOptions& options) {
  const BigRational& tol = options.tolerance;
  if (tol.sign() <= 0) throw std::invalid_argument("solve_reeb_parameter: tolerance must be positive");

  Bracket br = bracket_root(spec, options);
  std::optional<BigRational> exact_root = br.exact_root;
  BigRational lo = std::move(br.lo);
  BigRational hi = std::move(br.hi);

  if (!exact_root) {
    while (hi - lo > tol) {
      const BigRational mid = (lo + hi) / BigRational(2);
      const BigRational fmid = f_value(spec, mid);
      if (fmid.is_zero()) {
        exact_root = mid;
        break;
      }
      if (fmid.sign() < 0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }

  // An exactly hit root still gets a strict sign-change enclosure; F is
  // strictly increasing, so nudging by tol/2 on each side works (kept above
  // -1/2 via the midpoint toward the pole).
  if (exact_root) {
    const BigRational& r = *exact_root;
    lo = std::max(r - tol / BigRational(2), (r + BigRational(-1, 2)) / BigRational(2));
    hi = r + tol / BigRational(2);
  }
  if (f_value(spec, lo).sign() >= 0 || f_value(spec, hi).sign() <= 0) {
    throw SolverFailure("bisection enclosure lost the sign change of F");
  }
  RationalInterval enclosure{std::move(lo), std::move(hi)};

  // Independent route: isolate the root of P(a) and require agreement.
  RationalPoly numerator = exact_numerator_poly(spec);
  const RationalInterval poly_enclosure = isolate_reeb_root_from_poly(spec, tol);
  if (!enclosure.intersects(poly_enclosure)) {
    throw SolverFailure("bisection root and numerator-polynomial root disagree");
  }

  ReebSolution sol;
  sol.spec = spec;
  sol.futaki_at_zero = futaki_obstruction(spec);
  sol.numerator_poly = std::move(numerator);
  sol.a0_enclosure = enclosure;

  const RegularityResult reg = classify_regularity(sol.numerator_poly, poly_enclosure);
  sol.regularity = reg.kind;
  sol.a0_exact = reg.exact_root;

  if (sol.a0_exact) {
    sol.a0_float = sol.a0_exact->to_double();
  } else {
    // Newton polish on doubles, clamped to the exact enclosure.
    const double clamp_lo = enclosure.lo.to_double();
    const double clamp_hi = enclosure.hi.to_double();
    double x = enclosure.midpoint().to_double();
    for (int it = 0; it < 40; ++it) {
      const BigRational xr = BigRational::from_double(x);
      const double fx = f_value(spec, xr).to_double();
      if (fx == 0.0) break;
      const double dfx = f_derivative_value(spec, xr).to_double();
      const double step = fx / dfx;
      const double next = std::clamp(x - step, clamp_lo, clamp_hi);
      if (next == x) break;
      x = next;
      if (std::abs(step) <= std::abs(x) * 1e-17) break;
    }
    sol.a0_float = x;
  }
  sol.f_residual = f_value(spec, BigRational::from_double(sol.a0_float)).abs().to_double();
  return sol;
}

ReebSolution solve_reeb_parameter(const FanoBaseSpec& spec, const BigRational& tolerance) {
  SolveOptions opt;
  opt.tolerance = tolerance;
  return solve_reeb_parameter(spec, opt);
}

}  // namespace sasakit
