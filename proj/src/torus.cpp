#include "wald/torus.hpp"

#include <algorithm>

#include "wald/error.hpp"

namespace wald {

std::string_view to_string(EtaleKind kind) { return kind == EtaleKind::Split ? "split" : "ramified"; }

EtaleKind parse_kind(const std::string& text) {
  if (text == "split") return EtaleKind::Split;
  if (text == "ramified") return EtaleKind::Ramified;
  throw Error(ErrorKind::ConfigInvalid, "kind must be 'split' or 'ramified', got '" + text + "'");
}

namespace {

/// Valuation of x + y*s in the uniformizer s (s^2 = t).
int s_valuation(const LaurentPoly& x, const LaurentPoly& y) {
  const long vx = x.is_zero() ? kInfiniteValuation : 2L * x.valuation();
  const long vy = y.is_zero() ? kInfiniteValuation : 2L * y.valuation() + 1;
  return static_cast<int>(std::min(vx, vy));
}

int floor_half(int k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

}  // namespace

Mat2 embed(EtaleKind kind, const LaurentPoly& x, const LaurentPoly& y) {
  Mat2 m;
  if (kind == EtaleKind::Split) {
    if (x.is_zero() || y.is_zero()) throw Error(ErrorKind::NotInvertible, "split element with a zero coordinate");
    m << x, LaurentPoly(0), LaurentPoly(0), y;
  } else {
    if (x.is_zero() && y.is_zero()) throw Error(ErrorKind::NotInvertible, "zero element");
    // (x + y s) * 1 = x + y s;  (x + y s) * s = y t + x s.
    m << x, y.shifted(1), y, x;
  }
  return m;
}

Mat2 embed(const TorusClass& u) {
  if (u.kind == EtaleKind::Split) return embed(u.kind, LaurentPoly::t_pow(u.k1), LaurentPoly::t_pow(u.k2));
  if (u.k1 % 2 == 0) return embed(u.kind, LaurentPoly::t_pow(u.k1 / 2), LaurentPoly(0));
  // s^(2j+1) = t^j * s
  return embed(u.kind, LaurentPoly(0), LaurentPoly::t_pow(floor_half(u.k1)));
}

TorusClass torus_class(EtaleKind kind, const LaurentPoly& x, const LaurentPoly& y) {
  if (kind == EtaleKind::Split) {
    if (x.is_zero() || y.is_zero()) throw Error(ErrorKind::NotInvertible, "split element with a zero coordinate");
    return {kind, x.valuation(), y.valuation()};
  }
  if (x.is_zero() && y.is_zero()) throw Error(ErrorKind::NotInvertible, "zero element");
  return {kind, s_valuation(x, y), 0};
}

ExtendedLattice b_ex(EtaleKind kind, const Lattice2& lattice) {
  // Generators (t^a, 0) and (c, t^b).  Valuations are minimized over
  // generators; O-combinations cannot go lower.
  const LaurentPoly ta = LaurentPoly::t_pow(lattice.a());
  const LaurentPoly tb = LaurentPoly::t_pow(lattice.b());
  ExtendedLattice out;
  if (kind == EtaleKind::Split) {
    out.u = {kind, std::min(lattice.a(), lattice.c().valuation()), lattice.b()};
    out.m = lattice.det_valuation() - out.u.k1 - out.u.k2;
  } else {
    const int v = std::min(s_valuation(ta, LaurentPoly(0)), s_valuation(lattice.c(), tb));
    out.u = {kind, v, 0};
    // det(s^v) has t-valuation v.
    out.m = lattice.det_valuation() - v;
  }
  return out;
}

Lattice2 orbit_representative(EtaleKind kind, int m) {
  if (m < 0) throw Error(ErrorKind::ConfigInvalid, "orbit index must be nonnegative");
  if (kind == EtaleKind::Split) return Lattice2::from_triangular(m, 0, LaurentPoly(1));
  return Lattice2::from_triangular(0, m, LaurentPoly(0));
}

LaurentScalar character_value(const TorusClass& u) {
  if (u.kind == EtaleKind::Split) return LaurentScalar::monomial({u.k1, u.k2, 0});
  return LaurentScalar::monomial({0, 0, u.k1});
}

LaurentScalar central_character(EtaleKind kind) {
  return kind == EtaleKind::Split ? character_value({kind, 1, 1}) : character_value({kind, 2, 0});
}

VarSet character_vars(EtaleKind kind) {
  return kind == EtaleKind::Split ? VarSet::of({Var::Alpha, Var::Beta}) : VarSet::of({Var::Gamma});
}

Normalized normalize(EtaleKind kind, const Lattice2& lattice) {
  const ExtendedLattice ext = b_ex(kind, lattice);
  return Normalized{ext.m, character_value(ext.u), ext.u};
}

}  // namespace wald
