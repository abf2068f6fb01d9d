#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sasakit/rational.hpp"

namespace sasakit {

// Dense univariate polynomial with exact rational coefficients.
// coefficient(i) is the coefficient of x^i; the zero polynomial stores no
// coefficients and has degree() == -1.
class RationalPoly {
public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<BigRational> coeffs);
  RationalPoly(std::initializer_list<BigRational> coeffs);

  static RationalPoly constant(BigRational c);
  static RationalPoly monomial(BigRational c, int degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Zero beyond the stored degree.
  const BigRational& coefficient(int i) const;
  const BigRational& leading() const;  // throws on the zero polynomial
  const std::vector<BigRational>& coefficients() const { return c_; }

  BigRational eval(const BigRational& x) const;  // Horner, exact
  double eval_double(double x) const;            // Horner on double-rounded coeffs

  RationalPoly derivative() const;
  // The antiderivative with zero constant term: result' == *this exactly.
  RationalPoly antiderivative() const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const BigRational& s, const RationalPoly& p);
  friend RationalPoly operator-(const RationalPoly& p);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "x") const;

private:
  void normalize();
  std::vector<BigRational> c_;
};

RationalPoly pow(const RationalPoly& p, unsigned e);

// Euclidean division over Q[x]: p == q * quotient + remainder with
// deg(remainder) < deg(q). Throws std::domain_error when q is zero.
struct PolyDivMod {
  RationalPoly quotient;
  RationalPoly remainder;
};
PolyDivMod divmod(const RationalPoly& p, const RationalPoly& q);

// Monic greatest common divisor (1 for coprime inputs).
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);

std::ostream& operator<<(std::ostream& os, const RationalPoly& p);

}  // namespace sasakit
