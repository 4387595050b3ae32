#pragma once

#include <string>
#include <vector>

#include "wald/scalars.hpp"

namespace wald {

/// Dense univariate polynomial over Q; coeffs[i] multiplies x^i, no
/// trailing zeros.
struct QPolynomial {
  std::vector<Rational> coeffs;

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational operator()(const Rational& x) const;
  std::string str(const std::string& var = "q") const;
};

/// Unique polynomial of degree < xs.size() through the points (Newton form).
/// Throws ConfigInvalid on repeated nodes or a size mismatch.
QPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace wald
