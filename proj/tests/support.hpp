#pragma once

#include <random>

#include "wald/matrix.hpp"
#include "wald/scalars.hpp"
#include "wald/series.hpp"

namespace testsupport {

inline std::mt19937_64& rng() {
  thread_local std::mt19937_64 g(12345);
  return g;
}

inline long uniform(long lo, long hi) { return lo + static_cast<long>(rng()() % static_cast<std::uint64_t>(hi - lo + 1)); }

/// Polynomial with `terms` random coefficients starting at t^offset.
inline wald::LaurentPoly random_poly(int offset, int terms) {
  std::vector<long long> c(static_cast<std::size_t>(terms));
  for (auto& x : c) x = uniform(0, 100);
  return wald::LaurentPoly::from_coeffs(offset, c);
}

inline wald::LaurentPoly random_unit(int terms) {
  wald::LaurentPoly u;
  while (u.valuation() != 0) u = random_poly(0, terms);
  return u;
}

inline wald::Mat2 random_unimodular(int terms) {
  while (true) {
    wald::Mat2 A;
    A << random_poly(0, terms), random_poly(0, terms), random_poly(0, terms), random_poly(0, terms);
    if (wald::det2(A).valuation() == 0) return A;
  }
}

inline wald::Rational random_rational() {
  long num = 0;
  while (num == 0) num = uniform(-20, 20);
  return wald::Rational(num, uniform(1, 12));
}

inline wald::LaurentScalar random_scalar(int terms) {
  wald::LaurentScalar x;
  for (int i = 0; i < terms; ++i) {
    const wald::Exponent e{static_cast<int>(uniform(-2, 2)), static_cast<int>(uniform(-2, 2)), static_cast<int>(uniform(-2, 2))};
    x += wald::LaurentScalar::monomial(e, wald::SqrtQ(random_rational(), uniform(0, 1) ? random_rational() : wald::Rational(0)));
  }
  return x;
}

}  // namespace testsupport
