#pragma once

#include <string>
#include <string_view>

#include "wald/lattice.hpp"
#include "wald/scalars.hpp"

namespace wald {

/// The quadratic etale algebra: F + F with basis e1, e2 (Split) or F(s),
/// s^2 = t, with basis {1, s} (Ramified).  F^2 is identified with it through
/// that basis, so the standard lattice O^2 is the maximal order.
enum class EtaleKind { Split, Ramified };

std::string_view to_string(EtaleKind kind);
EtaleKind parse_kind(const std::string& text);

/// Class of a unit-free element in F~* / O~*: (t^k1, t^k2) when split, s^k1
/// when ramified (k2 unused).
struct TorusClass {
  EtaleKind kind = EtaleKind::Split;
  int k1 = 0;
  int k2 = 0;

  bool is_identity() const { return k1 == 0 && k2 == 0; }
  TorusClass inverse() const { return {kind, -k1, -k2}; }

  friend TorusClass operator+(const TorusClass& x, const TorusClass& y) { return {x.kind, x.k1 + y.k1, x.k2 + y.k2}; }
  friend bool operator==(const TorusClass&, const TorusClass&) = default;
};

/// Matrix of multiplication by x*e1 + y*e2 (Split) or x + y*s (Ramified).
/// Throws NotInvertible when the element is not a unit of the algebra.
Mat2 embed(EtaleKind kind, const LaurentPoly& x, const LaurentPoly& y);

/// embed() of the standard representative t^(k1,k2) or s^k1 of a class.
Mat2 embed(const TorusClass& u);

/// Class of an algebra element (throws NotInvertible on non-units).
TorusClass torus_class(EtaleKind kind, const LaurentPoly& x, const LaurentPoly& y);

struct ExtendedLattice {
  /// B_ex = u * O~.
  TorusClass u;
  /// dim_{F_q} B_ex / L.
  int m = 0;
};

/// The smallest free rank-one O~-module containing L, and its colength.
ExtendedLattice b_ex(EtaleKind kind, const Lattice2& lattice);

/// Standard lattice of the torus orbit with invariant m:
/// Split: span{(t^m, 0), (1, 1)}; Ramified: O + O*t^m*s.
Lattice2 orbit_representative(EtaleKind kind, int m);

/// chi(u) = alpha^k1 beta^k2 (Split) or gamma^k1 (Ramified).
LaurentScalar character_value(const TorusClass& u);

/// chi_c(t) = chi(t): alpha*beta (Split) or gamma^2 (Ramified).
LaurentScalar central_character(EtaleKind kind);

/// Variables a character value for this algebra can involve.
VarSet character_vars(EtaleKind kind);

struct Normalized {
  int m = 0;
  LaurentScalar chi;
  TorusClass u;
};

/// Writes L = u * L0 with L0 having B_ex = O~, returning its invariant m and
/// chi(u).
Normalized normalize(EtaleKind kind, const Lattice2& lattice);

}  // namespace wald
