#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sasakit {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Arithmetic is exact; there is no rounding anywhere except in
// the explicit to_double() conversion.
class BigRational {
public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(n) {}  // NOLINT: implicit by design
  BigRational(long num, long den);
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(mpq_class q);

  // Parses "p/q" or "p" (optional sign, decimal digits). Throws
  // std::invalid_argument on malformed input or zero denominator.
  static BigRational from_string(std::string_view s);

  // Exact dyadic value of a finite double.
  static BigRational from_double(double d);

  // 2^e as an exact rational (e may be negative).
  static BigRational pow2(long e);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRational abs() const;
  BigRational reciprocal() const;  // throws std::domain_error on zero

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.v_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

private:
  mpq_class v_;
};

// Integer power; negative exponents invert (throws std::domain_error on 0^-k).
BigRational pow(const BigRational& b, long e);

// Largest integer <= x, as a rational.
BigRational floor(const BigRational& x);

std::ostream& operator<<(std::ostream& os, const BigRational& x);

}  // namespace sasakit
