#include "sasakit/poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sasakit {

namespace {
const BigRational kZero(0);
}

RationalPoly::RationalPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

RationalPoly::RationalPoly(std::initializer_list<BigRational> coeffs) : c_(coeffs) {
  normalize();
}

RationalPoly RationalPoly::constant(BigRational c) {
  return RationalPoly({std::move(c)});
}

RationalPoly RationalPoly::monomial(BigRational c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<BigRational> v(degree + 1);
  v[degree] = std::move(c);
  return RationalPoly(std::move(v));
}

void RationalPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const BigRational& RationalPoly::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const BigRational& RationalPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading(): zero polynomial");
  return c_.back();
}

BigRational RationalPoly::eval(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return RationalPoly();
  std::vector<BigRational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = BigRational(static_cast<long>(i)) * c_[i];
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::antiderivative() const {
  if (c_.empty()) return RationalPoly();
  std::vector<BigRational> a(c_.size() + 1);
  for (size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / BigRational(static_cast<long>(i + 1));
  return RationalPoly(std::move(a));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return RationalPoly();
  std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const BigRational& s, const RationalPoly& p) {
  std::vector<BigRational> c(p.c_);
  for (auto& x : c) x *= s;
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& p) {
  return BigRational(-1) * p;
}

RationalPoly pow(const RationalPoly& p, unsigned e) {
  RationalPoly r = RationalPoly::constant(BigRational(1));
  RationalPoly base = p;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

PolyDivMod divmod(const RationalPoly& p, const RationalPoly& q) {
  if (q.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  RationalPoly rem = p;
  std::vector<BigRational> quot;
  const int dq = q.degree();
  if (rem.degree() >= dq) quot.resize(rem.degree() - dq + 1);
  while (!rem.is_zero() && rem.degree() >= dq) {
    const int k = rem.degree() - dq;
    const BigRational f = rem.leading() / q.leading();
    quot[k] = f;
    rem -= RationalPoly::monomial(f, k) * q;
  }
  return {RationalPoly(std::move(quot)), std::move(rem)};
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.leading().reciprocal() * a;  // monic
}

std::string RationalPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = c_[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const BigRational a = c.abs();
    if (i == 0 || a != BigRational(1)) os << a.str();
    if (i > 0) {
      if (a != BigRational(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& p) {
  return os << p.str();
}

}  // namespace sasakit
