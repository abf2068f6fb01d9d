#pragma once

#include <random>
#include <vector>

#include "sasakit/fano.hpp"
#include "sasakit/poly.hpp"
#include "sasakit/rational.hpp"

namespace testsupport {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5a5a11u);
  return gen;
}

inline long random_int(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng());
}

// Uniform-ish rational with numerator in [num_lo, num_hi] and denominator in
// [1, den_hi].
inline sasakit::BigRational random_rational(long num_lo, long num_hi, long den_hi) {
  return sasakit::BigRational(random_int(num_lo, num_hi), random_int(1, den_hi));
}

// Eigenvalue strictly inside (-3/4, 3/4).
inline sasakit::BigRational random_mu() {
  const long den = random_int(2, 40);
  const long cap = (3 * den - 1) / 4;
  return sasakit::BigRational(random_int(-cap, cap), den);
}

inline sasakit::FanoBaseSpec random_spec(int max_dim = 5) {
  const int n = static_cast<int>(random_int(1, max_dim));
  std::vector<sasakit::SpectrumEntry> entries;
  int left = n;
  while (left > 0) {
    const int mult = static_cast<int>(random_int(1, left));
    entries.push_back({random_mu(), mult});
    left -= mult;
  }
  return sasakit::FanoBaseSpec::make(std::move(entries), "random");
}

inline sasakit::RationalPoly random_poly(int max_degree, long coeff_cap = 9) {
  const int deg = static_cast<int>(random_int(0, max_degree));
  std::vector<sasakit::BigRational> c(deg + 1);
  for (auto& x : c) x = random_rational(-coeff_cap, coeff_cap, 6);
  return sasakit::RationalPoly(std::move(c));
}

// Reeb parameter in [-3/8, 5).
inline sasakit::BigRational random_reeb_parameter() {
  const long den = random_int(1, 8);
  const long num = random_int(0, 5 * den);
  return sasakit::BigRational(-3, 8) + sasakit::BigRational(num, den + 1);
}

}  // namespace testsupport
