#include "wald/interpolate.hpp"

#include <sstream>

#include "wald/error.hpp"

namespace wald {

Rational QPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string QPolynomial::str(const std::string& var) const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (c.sign() < 0) c = -c;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != Rational(1)) os << c << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

QPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw Error(ErrorKind::ConfigInvalid, "interpolation needs matching nonempty node lists");
  const std::size_t n = xs.size();
  // Divided differences.
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational dx = xs[i] - xs[i - level];
      if (dx.is_zero()) throw Error(ErrorKind::ConfigInvalid, "repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  }
  // Expand the Newton form by Horner's rule.
  std::vector<Rational> poly{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= xs[k] * poly[i];
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
  return QPolynomial{poly};
}

}  // namespace wald
