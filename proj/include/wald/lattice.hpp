#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "wald/matrix.hpp"
#include "wald/series.hpp"

namespace wald {

/// Dominant coweight (a1 >= a2) of GL2.
struct Coweight {
  int a1 = 0;
  int a2 = 0;

  /// Throws ConfigInvalid unless a1 >= a2.
  static Coweight make(int a1, int a2);
  /// Parses "(a1,a2)" (whitespace tolerated).
  static Coweight parse(const std::string& text);

  int length() const { return a1 - a2; }
  int degree() const { return a1 + a2; }

  friend auto operator<=>(const Coweight&, const Coweight&) = default;
};

std::string to_string(const Coweight& w);
std::ostream& operator<<(std::ostream& os, const Coweight& w);

/// Full-rank O-lattice in F^2 held in canonical Hermite form: the O-span of
/// the columns (t^a, 0) and (c, t^b), with c reduced modulo t^a O.
class Lattice2 {
 public:
  /// The standard lattice O^2.
  Lattice2() = default;

  /// Builds the lattice with the given triangular basis, reducing c mod t^a.
  static Lattice2 from_triangular(int a, int b, const LaurentPoly& c);

  int a() const { return a_; }
  int b() const { return b_; }
  const LaurentPoly& c() const { return c_; }

  /// val det of the canonical basis.
  int det_valuation() const { return a_ + b_; }

  Mat2 basis() const;
  /// Exact inverse of basis(); no truncation is needed because the
  /// diagonal entries are monomials.
  Mat2 inverse_basis() const;

  /// t^k L.
  Lattice2 scaled(int k) const;

  /// Order on (a, b, c).
  friend bool operator<(const Lattice2& x, const Lattice2& y);
  friend bool operator==(const Lattice2& x, const Lattice2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }
  friend bool operator!=(const Lattice2& x, const Lattice2& y) { return !(x == y); }

  std::string str() const;

 private:
  int a_ = 0;
  int b_ = 0;
  LaurentPoly c_;
};

std::ostream& operator<<(std::ostream& os, const Lattice2& L);

/// Canonical form of the O-span of the columns of `generators`.
/// Throws SingularGenerators when det = 0.
Lattice2 canonicalize(const Mat2& generators);

/// g * L for g in GL2(F).
Lattice2 transform(const Mat2& g, const Lattice2& lattice);

/// Elementary divisors (a1 >= a2) of `to` relative to `from`: in suitable
/// bases, to = diag(t^a1, t^a2) * from.
Coweight relative_position(const Lattice2& from, const Lattice2& to);

/// All L' with relative_position(L, L') == position, duplicate-free and
/// sorted.  For position (d, 0) these are the sublattices with cyclic
/// quotient L/L' = O/t^d.
std::vector<Lattice2> enumerate_in_position(const Lattice2& lattice, const Coweight& position);

/// All L' whose position relative to L lies in the closure of `position`:
/// positions mu with the same degree and a2 <= mu2 <= mu1 <= a1.  For (d, 0)
/// these are all sublattices of colength d.
std::vector<Lattice2> closure_members(const Lattice2& lattice, const Coweight& position);

}  // namespace wald
