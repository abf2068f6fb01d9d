#include <doctest.h>

#include <cmath>

#include "sasakit/errors.hpp"
#include "sasakit/reeb.hpp"
#include "test_support.hpp"

using namespace sasakit;
using testsupport::random_reeb_parameter;
using testsupport::random_spec;

namespace {
const FanoBaseSpec kDelPezzo = product_projective_spaces({1}, {1});
}

TEST_CASE("mu_shift") {
  CHECK(mu_shift(BigRational(1, 2), BigRational(0)) == BigRational(1, 2));
  CHECK(mu_shift(BigRational(1, 2), BigRational(1)) == BigRational(2));
  for (int i = 0; i < 20; ++i) {
    CHECK(mu_shift(BigRational(-1), random_reeb_parameter()) == BigRational(-1));
  }
}

TEST_CASE("moment interval lower endpoint") {
  CHECK(moment_lower_endpoint(BigRational(0)) == BigRational(-1));
  CHECK(moment_lower_endpoint(BigRational(1, 2)) == BigRational(-1, 2));
  CHECK_THROWS_AS(moment_lower_endpoint(BigRational(-1, 2)), ReebParameterOutOfRange);
  CHECK_THROWS_AS(moment_lower_endpoint(BigRational(-3)), ReebParameterOutOfRange);
}

TEST_CASE("integrand polynomial") {
  CHECK(integrand_poly(kDelPezzo, BigRational(0)) ==
        RationalPoly({BigRational(0), BigRational(1), BigRational(1, 2)}));
  CHECK(integrand_poly(kDelPezzo, BigRational(1)) ==
        RationalPoly({BigRational(0), BigRational(1), BigRational(2)}));
  CHECK_THROWS_AS(integrand_poly(kDelPezzo, BigRational(-1, 2)), ReebParameterOutOfRange);

  // mu = 0 collapses every shifted eigenvalue to a.
  for (int n = 1; n <= 4; ++n) {
    const auto spec = FanoBaseSpec::make({{BigRational(0), n}});
    const BigRational a = random_reeb_parameter();
    const RationalPoly expected =
        RationalPoly::monomial(BigRational(1), 1) *
        pow(RationalPoly({BigRational(1), a}), static_cast<unsigned>(n));
    CHECK(integrand_poly(spec, a) == expected);
  }
}

TEST_CASE("A vanishes at the lower endpoint and A_0(1) = -1/3 for del Pezzo") {
  CHECK(a_value(kDelPezzo, BigRational(0), BigRational(1)) == BigRational(-1, 3));
  for (int i = 0; i < 30; ++i) {
    const auto spec = random_spec();
    const BigRational a = random_reeb_parameter();
    CHECK(a_value(spec, a, moment_lower_endpoint(a)).is_zero());
  }
}

TEST_CASE("A(1) nearly vanishes at the solved Reeb parameter") {
  const ReebSolution sol = solve_reeb_parameter(kDelPezzo);
  const BigRational residual = a_value(kDelPezzo, sol.a0_enclosure.midpoint(), BigRational(1));
  CHECK(residual.abs() <= BigRational(1, 100000000000L));  // |A(1)| <= 1e-11
}

TEST_CASE("F values") {
  CHECK(f_value(kDelPezzo, BigRational(0)) == BigRational(1, 3));
  CHECK(f_value(FanoBaseSpec::make({{BigRational(-1, 2), 1}}), BigRational(0)) ==
        BigRational(-1, 3));
  for (int n = 1; n <= 6; ++n) {
    CHECK(f_value(FanoBaseSpec::make({{BigRational(0), n}}), BigRational(0)).is_zero());
  }
}

TEST_CASE("F equals -A(1) exactly") {
  for (int i = 0; i < 30; ++i) {
    const auto spec = random_spec();
    const BigRational a = random_reeb_parameter();
    CHECK(f_value(spec, a) == -a_value(spec, a, BigRational(1)));
  }
}

TEST_CASE("F' closed forms") {
  CHECK(f_derivative_value(FanoBaseSpec::make({{BigRational(0), 1}}), BigRational(0)) ==
        BigRational(8, 3));
  CHECK(f_derivative_value(kDelPezzo, BigRational(0)) == BigRational(2));
}

TEST_CASE("F' is strictly positive and the boundary term is negative") {
  for (int i = 0; i < 40; ++i) {
    const auto spec = random_spec();
    const BigRational a = random_reeb_parameter();
    CHECK(f_derivative_value(spec, a).sign() > 0);
    // f(-1/(1+2a); a) < 0 exactly.
    CHECK(integrand_poly(spec, a).eval(moment_lower_endpoint(a)).sign() < 0);
  }
}

TEST_CASE("F' matches central differences at order >= 1.9") {
  for (int trial = 0; trial < 5; ++trial) {
    const auto spec = random_spec();
    const BigRational a = random_reeb_parameter();
    const double exact = f_derivative_value(spec, a).to_double();
    double err_prev = 0;
    int k = 0;
    for (long den : {1000L, 10000L, 100000L}) {
      const BigRational h(1, den);
      const BigRational fd = (f_value(spec, a + h) - f_value(spec, a - h)) / (BigRational(2) * h);
      const double err = std::abs(fd.to_double() - exact);
      if (k > 0 && err_prev > 1e-14) {
        const double order = std::log10(err_prev / std::max(err, 1e-18));
        CHECK(order >= 1.9);
      }
      err_prev = err;
      ++k;
    }
  }
}

TEST_CASE("F is strictly monotone in a") {
  for (int i = 0; i < 10; ++i) {
    const auto spec = random_spec();
    BigRational a(-2, 5);
    BigRational prev = f_value(spec, a);
    for (int k = 0; k < 8; ++k) {
      a += BigRational(27, 40);
      const BigRational next = f_value(spec, a);
      CHECK(prev < next);
      prev = next;
    }
  }
}

TEST_CASE("numerator polynomial of the del Pezzo case") {
  const RationalPoly p = exact_numerator_poly(kDelPezzo);
  CHECK(p == RationalPoly({BigRational(1, 3), BigRational(4), BigRational(11), BigRational(34, 3),
                           BigRational(4)}));
  // Divisible by 12a^2 + 10a + 1 with zero remainder.
  const auto dm = divmod(p, RationalPoly({BigRational(1), BigRational(10), BigRational(12)}));
  CHECK(dm.remainder.is_zero());
}

TEST_CASE("numerator polynomial reproduces F after clearing (1+2a)^(n+2)") {
  for (int i = 0; i < 8; ++i) {
    const auto spec = random_spec();
    const RationalPoly p = exact_numerator_poly(spec);
    const int n = spec.dimension();
    for (int k = 0; k < 20; ++k) {
      const BigRational a = random_reeb_parameter();
      const BigRational denom = pow(BigRational(1) + BigRational(2) * a, n + 2);
      CHECK(p.eval(a) == denom * f_value(spec, a));
    }
  }
}

TEST_CASE("numerator polynomial special factors") {
  // F(0) = 0 forces the factor a.
  CHECK(exact_numerator_poly(FanoBaseSpec::make({{BigRational(0), 1}}))
            .eval(BigRational(0))
            .is_zero());
  // [(-1/2,1)]: divisible by 4a^2 + 6a - 1.
  const auto dm = divmod(exact_numerator_poly(FanoBaseSpec::make({{BigRational(-1, 2), 1}})),
                         RationalPoly({BigRational(-1), BigRational(6), BigRational(4)}));
  CHECK(dm.remainder.is_zero());
}

TEST_CASE("futaki obstruction closed forms") {
  CHECK(futaki_obstruction(kDelPezzo) == BigRational(1, 3));
  for (int n = 1; n <= 6; ++n) {
    CHECK(futaki_obstruction(FanoBaseSpec::make({{BigRational(0), n}})).is_zero());
  }
  CHECK(futaki_obstruction(fermat_hypersurface(3)) == BigRational(21, 20));
}

TEST_CASE("futaki obstruction equals F(0) and vanishes on antisymmetric spectra") {
  for (int i = 0; i < 30; ++i) {
    const auto spec = random_spec();
    CHECK(futaki_obstruction(spec) == f_value(spec, BigRational(0)));
  }
  for (int i = 0; i < 20; ++i) {
    const BigRational mu = testsupport::random_mu().abs();
    if (mu.is_zero()) continue;
    const auto spec = FanoBaseSpec::make({{mu, 1}, {-mu, 1}});
    CHECK(futaki_obstruction(spec).is_zero());
  }
}

TEST_CASE("solve: del Pezzo golden root") {
  const ReebSolution sol = solve_reeb_parameter(kDelPezzo);
  const double reference = (-5.0 + std::sqrt(13.0)) / 12.0;
  CHECK(std::abs(sol.a0_float - reference) <= 1e-12);
  CHECK(sol.regularity == Regularity::Irregular);
  CHECK(!sol.a0_exact.has_value());
  CHECK(sol.f_residual <= 1e-12);
  CHECK(sol.futaki_at_zero == BigRational(1, 3));
  CHECK(sol.a0_enclosure.width() <= default_reeb_tolerance());
  // Exact sign change across the enclosure.
  CHECK(f_value(kDelPezzo, sol.a0_enclosure.lo).sign() < 0);
  CHECK(f_value(kDelPezzo, sol.a0_enclosure.hi).sign() > 0);
  // Enclosure stays right of the pole.
  CHECK(sol.a0_enclosure.lo > BigRational(-1, 2));
}

TEST_CASE("solve: symmetric spectra give the quasi-regular root 0") {
  for (int n = 1; n <= 6; ++n) {
    const ReebSolution sol = solve_reeb_parameter(FanoBaseSpec::make({{BigRational(0), n}}));
    CHECK(sol.regularity == Regularity::QuasiRegular);
    REQUIRE(sol.a0_exact.has_value());
    CHECK(sol.a0_exact->is_zero());
    CHECK(sol.a0_float == 0.0);
    CHECK(sol.futaki_at_zero.is_zero());
  }
}

TEST_CASE("solve: negative eigenvalue pushes the root right") {
  const ReebSolution sol = solve_reeb_parameter(FanoBaseSpec::make({{BigRational(-1, 2), 1}}));
  CHECK(std::abs(sol.a0_float - (-3.0 + std::sqrt(13.0)) / 4.0) <= 1e-12);
  CHECK(sol.regularity == Regularity::Irregular);
}

TEST_CASE("solve: requested tolerance is honored") {
  const BigRational tol(1, 1000);
  const ReebSolution sol = solve_reeb_parameter(kDelPezzo, tol);
  CHECK(sol.a0_enclosure.width() <= tol);
  CHECK(sol.a0_enclosure.contains(BigRational::from_double(sol.a0_float)));
}

TEST_CASE("independent polynomial route agrees with the bisection route") {
  for (int i = 0; i < 6; ++i) {
    const auto spec = random_spec();
    const BigRational tol(1, 10000000000L);
    const ReebSolution sol = solve_reeb_parameter(spec, tol);
    const RationalInterval poly_root = isolate_reeb_root_from_poly(spec, tol);
    CHECK(sol.a0_enclosure.intersects(poly_root));
  }
}

TEST_CASE("classify_regularity") {
  const auto irregular =
      classify_regularity(exact_numerator_poly(kDelPezzo),
                          isolate_reeb_root_from_poly(kDelPezzo, BigRational(1, 1 << 20)));
  CHECK(irregular.kind == Regularity::Irregular);

  const auto sym = FanoBaseSpec::make({{BigRational(0), 2}});
  const auto regular = classify_regularity(exact_numerator_poly(sym),
                                           isolate_reeb_root_from_poly(sym, BigRational(1, 1 << 20)));
  CHECK(regular.kind == Regularity::QuasiRegular);
  CHECK(regular.exact_root == BigRational(0));
}

TEST_CASE("fault injection: unreachable caps surface as SolverFailure") {
  SolveOptions options;
  options.upper_cap = BigRational(1, 100);
  options.lower_gap_floor = BigRational(1, 100);
  // Root of [( -1/2, 1 )] sits near 0.151 > upper_cap.
  CHECK_THROWS_AS(solve_reeb_parameter(FanoBaseSpec::make({{BigRational(-1, 2), 1}}), options),
                  SolverFailure);
}

TEST_CASE("tolerance must be positive") {
  CHECK_THROWS_AS(solve_reeb_parameter(kDelPezzo, BigRational(0)), std::invalid_argument);
  CHECK_THROWS_AS(solve_reeb_parameter(kDelPezzo, BigRational(-1, 10)), std::invalid_argument);
}
