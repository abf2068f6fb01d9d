#include "sasakit/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sasakit {

namespace {

mpq_class canonical(mpq_class q) {
  if (q.get_den() == 0) throw std::invalid_argument("BigRational: zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

BigRational::BigRational(long num, long den)
    : v_(canonical(mpq_class(mpz_class(num), mpz_class(den)))) {}

BigRational::BigRational(const mpz_class& num, const mpz_class& den)
    : v_(canonical(mpq_class(num, den))) {}

BigRational::BigRational(mpq_class q) : v_(canonical(std::move(q))) {}

BigRational BigRational::from_string(std::string_view s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string_view::npos) throw std::invalid_argument("BigRational: empty string");
  s = s.substr(b, e - b + 1);
  std::string t(s);
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  // mpq_class(string) accepts "num" and "num/den" in base 10 and throws
  // std::invalid_argument otherwise; it does not canonicalize.
  mpq_class q(t, 10);
  return BigRational(std::move(q));
}

BigRational BigRational::from_double(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("BigRational: non-finite double");
  return BigRational(mpq_class(d));
}

BigRational BigRational::pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? BigRational(mpz_class(1), p) : BigRational(p, mpz_class(1));
}

BigRational BigRational::abs() const {
  return sign() < 0 ? -*this : *this;
}

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw std::domain_error("BigRational: reciprocal of zero");
  return BigRational(den(), num());
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string BigRational::str() const {
  return v_.get_str();
}

BigRational pow(const BigRational& b, long e) {
  if (e == 0) return BigRational(1);
  const BigRational base = e < 0 ? b.reciprocal() : b;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
  return BigRational(n, d);
}

BigRational floor(const BigRational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return BigRational(q, mpz_class(1));
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) {
  return os << x.str();
}

}  // namespace sasakit
