#pragma once

#include <optional>
#include <vector>

#include "sasakit/poly.hpp"
#include "sasakit/rational.hpp"

namespace sasakit {

// Closed rational interval, lo <= hi. A degenerate interval (lo == hi) marks
// an exactly known point.
struct RationalInterval {
  BigRational lo;
  BigRational hi;

  BigRational width() const { return hi - lo; }
  BigRational midpoint() const { return (lo + hi) / BigRational(2); }
  bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
  bool intersects(const RationalInterval& o) const { return lo <= o.hi && o.lo <= hi; }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

// All real roots of p lie in [-bound, bound].
BigRational cauchy_root_bound(const RationalPoly& p);

// Sturm chain of the squarefree part of p.
std::vector<RationalPoly> sturm_chain(const RationalPoly& p);

// Number of sign variations of the chain at x (zero entries skipped).
int sign_variations(const std::vector<RationalPoly>& chain, const BigRational& x);

// Default enclosure width 2^-64.
const BigRational& default_enclosure_width();

// Isolates the real roots of p lying in the open interval (lo, hi); when hi
// is absent the Cauchy bound caps the search. Each returned enclosure
// contains exactly one real root (multiplicities collapsed), enclosures are
// pairwise disjoint and sorted, and each is refined to the requested width.
// An enclosure is degenerate ([r, r]) exactly when the root r was hit
// exactly; otherwise the squarefree part of p changes sign at its endpoints.
// Throws std::domain_error for the zero polynomial.
std::vector<RationalInterval> isolate_real_roots(
    const RationalPoly& p, const BigRational& lo,
    const std::optional<BigRational>& hi = std::nullopt,
    const BigRational& width = default_enclosure_width());

// The rational with the smallest denominator in the closed interval [lo, hi]
// (ties broken toward the smaller numerator magnitude).
BigRational simplest_rational_in(const BigRational& lo, const BigRational& hi);

// Given an enclosure that isolates exactly one real root of p, returns that
// root when it is rational and nullopt when it is certifiably irrational.
// The certificate: any rational root has denominator bounded by the leading
// integer coefficient; the enclosure is refined below the Farey spacing for
// that bound, so at most one candidate survives and is checked exactly.
std::optional<BigRational> rational_root_test(const RationalPoly& p,
                                              const RationalInterval& enclosure);

}  // namespace sasakit
