#include "sasakit/roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sasakit {

BigRational cauchy_root_bound(const RationalPoly& p) {
  if (p.is_zero()) throw std::domain_error("cauchy_root_bound: zero polynomial");
  BigRational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    BigRational r = (p.coefficient(i) / p.leading()).abs();
    if (r > m) m = r;
  }
  return BigRational(1) + m;
}

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
  if (p.is_zero()) throw std::domain_error("sturm_chain: zero polynomial");
  RationalPoly g = poly_gcd(p, p.derivative());
  RationalPoly q = g.degree() > 0 ? divmod(p, g).quotient : p;
  std::vector<RationalPoly> chain;
  chain.push_back(q);
  if (q.degree() == 0) return chain;
  chain.push_back(q.derivative());
  while (chain.back().degree() > 0) {
    RationalPoly r = divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;  // squarefree input: only at the constant tail
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations(const std::vector<RationalPoly>& chain, const BigRational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = p.eval(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

const BigRational& default_enclosure_width() {
  static const BigRational w = BigRational::pow2(-64);
  return w;
}

namespace {

// Counts distinct real roots in (lo, hi]; both endpoints must be non-roots
// of the chain's head, which makes the count valid for the open interval too.
int count_roots(const std::vector<RationalPoly>& chain, const BigRational& lo,
                const BigRational& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

// Sign bisection of a simple root bracketed by a strict sign change.
RationalInterval refine_bracket(const RationalPoly& q, BigRational lo, BigRational hi,
                                const BigRational& width) {
  int slo = q.eval(lo).sign();
  while (hi - lo > width) {
    const BigRational m = (lo + hi) / BigRational(2);
    const int sm = q.eval(m).sign();
    if (sm == 0) return {m, m};
    if (sm == slo) {
      lo = m;
    } else {
      hi = m;
    }
  }
  return {std::move(lo), std::move(hi)};
}

}  // namespace

std::vector<RationalInterval> isolate_real_roots(const RationalPoly& p,
                                                 const BigRational& lo,
                                                 const std::optional<BigRational>& hi,
                                                 const BigRational& width) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  if (width.sign() <= 0) throw std::invalid_argument("isolate_real_roots: width must be positive");
  if (p.degree() == 0) return {};

  BigRational upper = hi.value_or(cauchy_root_bound(p));
  if (upper <= lo) return {};

  // Squarefree part; roots exactly at the (open) interval ends are deflated
  // away so that Sturm counts stay valid at the endpoints.
  RationalPoly q = sturm_chain(p)[0];
  for (const BigRational* end : {&lo, static_cast<const BigRational*>(&upper)}) {
    if (q.eval(*end).is_zero()) {
      q = divmod(q, RationalPoly({-*end, BigRational(1)})).quotient;
    }
  }
  if (q.degree() < 1) return {};
  const std::vector<RationalPoly> chain = sturm_chain(q);

  std::vector<RationalInterval> result;
  std::vector<std::pair<BigRational, BigRational>> stack;
  stack.emplace_back(lo, upper);

  // Midpoints that land exactly on a root are emitted as degenerate
  // enclosures and deflated out of the working polynomial.
  RationalPoly work = q;
  std::vector<RationalPoly> work_chain = chain;
  while (!stack.empty()) {
    auto [l, h] = std::move(stack.back());
    stack.pop_back();
    const int c = count_roots(work_chain, l, h);
    if (c == 0) continue;
    if (c == 1) {
      result.push_back(refine_bracket(work, l, h, width));
      continue;
    }
    const BigRational m = (l + h) / BigRational(2);
    if (work.eval(m).is_zero()) {
      result.push_back({m, m});
      work = divmod(work, RationalPoly({-m, BigRational(1)})).quotient;
      if (work.degree() < 1) break;
      work_chain = sturm_chain(work);
      // Pending interval counts refer to the deflated polynomial from here
      // on; the removed root no longer lies strictly inside any of them.
    }
    stack.emplace_back(l, m);
    stack.emplace_back(m, h);
  }

  std::sort(result.begin(), result.end(),
            [](const RationalInterval& a, const RationalInterval& b) { return a.lo < b.lo; });
  return result;
}

BigRational simplest_rational_in(const BigRational& lo, const BigRational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
  if (lo == hi) return lo;
  if (lo.sign() <= 0 && hi.sign() >= 0) return BigRational(0);
  if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
  // 0 < lo < hi
  const BigRational fl = floor(lo);
  if (lo == fl) return fl;
  if (fl + BigRational(1) <= hi) return fl + BigRational(1);
  return fl + simplest_rational_in((hi - fl).reciprocal(), (lo - fl).reciprocal()).reciprocal();
}

std::optional<BigRational> rational_root_test(const RationalPoly& p,
                                              const RationalInterval& enclosure) {
  if (p.is_zero()) throw std::domain_error("rational_root_test: zero polynomial");
  if (p.eval(enclosure.lo).is_zero()) return enclosure.lo;
  if (p.eval(enclosure.hi).is_zero()) return enclosure.hi;
  if (enclosure.lo == enclosure.hi) return std::nullopt;

  // Clear denominators and strip the content; any rational root u/v in
  // lowest terms then has v dividing the leading integer coefficient.
  mpz_class lcm(1);
  for (const auto& c : p.coefficients()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    lcm = l;
  }
  mpz_class content(0);
  std::vector<mpz_class> ic;
  ic.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.num() * (lcm / c.den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    content = g;
    ic.push_back(std::move(v));
  }
  mpz_class denom_bound = ::abs(ic.back() / content);
  const BigRational bound_sq = BigRational(denom_bound * denom_bound, mpz_class(1));

  // Refine below the Farey spacing 1/B^2 so at most one candidate remains.
  RationalPoly q = sturm_chain(p)[0];
  BigRational lo = enclosure.lo;
  BigRational hi = enclosure.hi;
  int slo = q.eval(lo).sign();
  const int shi = q.eval(hi).sign();
  if (slo == 0 || shi == 0 || slo == shi) {
    throw std::invalid_argument("rational_root_test: enclosure does not bracket a simple root");
  }
  while ((hi - lo) * bound_sq >= BigRational(1)) {
    const BigRational m = (lo + hi) / BigRational(2);
    const int sm = q.eval(m).sign();
    if (sm == 0) return m;
    if (sm == slo) {
      lo = m;
    } else {
      hi = m;
    }
  }

  const BigRational candidate = simplest_rational_in(lo, hi);
  if (candidate.den() <= denom_bound && p.eval(candidate).is_zero()) return candidate;
  return std::nullopt;
}

}  // namespace sasakit
