#pragma once

#include <map>
#include <ostream>
#include <string>

#include "wald/lattice.hpp"
#include "wald/scalars.hpp"
#include "wald/torus.hpp"

namespace wald {

/// Finitely supported combination of double-coset indicators T_lambda of the
/// spherical Hecke algebra of GL2, with LaurentScalar coefficients.
class HeckeElement {
 public:
  using Terms = std::map<Coweight, LaurentScalar>;

  HeckeElement() = default;

  /// coeff * T_lambda.
  static HeckeElement basis(const Coweight& lambda, const LaurentScalar& coeff = LaurentScalar(1));
  /// T_(0,0), the unit.
  static HeckeElement unit() { return basis(Coweight{0, 0}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentScalar coeff(const Coweight& lambda) const;

  /// Largest a1 - a2 in the support (-1 for zero).
  int max_length() const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);

  friend HeckeElement operator+(HeckeElement x, const HeckeElement& y) { return x += y; }
  friend HeckeElement operator-(HeckeElement x, const HeckeElement& y) { return x -= y; }
  friend HeckeElement operator*(const LaurentScalar& c, const HeckeElement& h);
  friend bool operator==(const HeckeElement& x, const HeckeElement& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const HeckeElement& x, const HeckeElement& y) { return !(x == y); }

  std::string str() const;

 private:
  void add_term(const Coweight& lambda, const LaurentScalar& c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const HeckeElement& h);

/// Structure constants of T_lambda * T_mu: the coefficient of T_nu is the
/// number of lattices L'' in position lambda from O^2 whose position relative
/// to diag(t^nu1, t^nu2) O^2 is mu.  Results are memoized per (q, lambda, mu).
const std::map<Coweight, long>& basis_convolution(const Coweight& lambda, const Coweight& mu);

/// Bilinear extension of basis_convolution.
HeckeElement convolve(const HeckeElement& h1, const HeckeElement& h2);

/// A_lambda, pinned by A_(0,0) = T_(0,0), A_(1,0) = T_(1,0), A_(1,1) = T_(1,1),
/// A_(d+1,0) = A_(1,0) * A_(d,0) - A_(1,1) * A_(d-1,0) and
/// A_(a,b) = T_(b,b) * A_(a-b,0).
HeckeElement satake_basis(const Coweight& lambda);

/// Coefficients of h in the A-basis, found by peeling off the longest
/// coweight (A_nu = T_nu + shorter terms).
std::map<Coweight, LaurentScalar> satake_coordinates(const HeckeElement& h);

/// Image in the chi_c-twisted algebra: T_(a1,a2) -> chi_c(t)^a2 T_(a1-a2,0).
HeckeElement reduce_central(const HeckeElement& h, EtaleKind kind);

/// Character of the irreducible GL2 representation of highest weight lambda
/// at diag(e1, e2): (e1 e2)^a2 * sum_{i=0}^{a1-a2} e1^i e2^(a1-a2-i).
/// Throws ZeroEigenvalue if e1 or e2 is zero.
Rational schur_gl2(const Coweight& lambda, const Rational& e1, const Rational& e2);

}  // namespace wald
