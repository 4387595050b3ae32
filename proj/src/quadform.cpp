#include "wald/quadform.hpp"

#include <algorithm>
#include <utility>

#include "wald/context.hpp"
#include "wald/error.hpp"

namespace wald {

SymMatrixO SymMatrixO::make(LaurentPoly x, LaurentPoly y, LaurentPoly z) {
  for (const LaurentPoly* e : {&x, &y, &z}) {
    if (!e->is_zero() && e->valuation() < 0) throw Error(ErrorKind::ConfigInvalid, "entry " + e->str() + " is not in O");
  }
  SymMatrixO B{std::move(x), std::move(y), std::move(z)};
  if (B.det().is_zero()) throw Error(ErrorKind::SingularGenerators, "symmetric matrix has zero determinant");
  return B;
}

Mat2 SymMatrixO::matrix() const {
  Mat2 m;
  m << x, y, y, z;
  return m;
}

std::string_view to_string(SquareClass c) { return c == SquareClass::Square ? "Square" : "NonSquare"; }

std::string_view to_string(CoverType c) {
  switch (c) {
    case CoverType::SplitCover: return "SplitCover";
    case CoverType::RamifiedCover: return "RamifiedCover";
    case CoverType::UnramifiedNonsplitCover: return "UnramifiedNonsplitCover";
  }
  return "?";
}

int default_precision(const SymMatrixO& form) { return 2 * form.det().valuation() + 2; }

SquareClass residue_class(const LaurentPoly& unit) {
  if (unit.valuation() != 0) throw Error(ErrorKind::NotAUnit, unit.str());
  return unit.coeff(0).is_nonzero_square() ? SquareClass::Square : SquareClass::NonSquare;
}

namespace {

Mat2 truncated(const Mat2& m, int precision) {
  Mat2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out(i, j) = m(i, j).truncated(precision);
  }
  return out;
}

Mat2 congruence(const Mat2& A, const Mat2& B, int precision) {
  Mat2 AB = truncated(A * B, precision);
  return truncated(AB * A.transpose(), precision);
}

Mat2 swap_matrix() {
  Mat2 m;
  m << LaurentPoly(0), LaurentPoly(1), LaurentPoly(1), LaurentPoly(0);
  return m;
}

}  // namespace

Diagonalization diagonalize(const SymMatrixO& form, int precision) {
  if (current_q() == 2) throw Error(ErrorKind::ConfigInvalid, "characteristic 2 is not supported");
  const int vdet = form.det().valuation();
  if (vdet >= precision) {
    throw Error(ErrorKind::PrecisionExhausted, "val det = " + std::to_string(vdet) + " >= precision " + std::to_string(precision));
  }

  Mat2 A = Mat2::Identity();
  Mat2 B = truncated(form.matrix(), precision);

  // Bring an entry of minimal valuation to position (0,0).
  const int vx = B(0, 0).valuation();
  const int vy = B(0, 1).valuation();
  const int vz = B(1, 1).valuation();
  const int k = std::min({vx, vy, vz});
  if (vx != k) {
    Mat2 step;
    if (vz == k) {
      step = swap_matrix();
    } else {
      // e1 -> e1 + e2 gives x + 2y + z, of valuation k because 2 is a unit.
      step << LaurentPoly(1), LaurentPoly(1), LaurentPoly(0), LaurentPoly(1);
    }
    B = congruence(step, B, precision);
    A = truncated(step * A, precision);
  }

  // Clear the off-diagonal entry: e2 -> e2 - (y/x) e1.
  const LaurentPoly& x = B(0, 0);
  const LaurentPoly x_inv_unit = invert_unit(unit_part(x), precision);
  const LaurentPoly h = (B(0, 1).shifted(-k) * x_inv_unit).truncated(precision);
  {
    Mat2 step;
    step << LaurentPoly(1), LaurentPoly(0), -h, LaurentPoly(1);
    B = congruence(step, B, precision);
    A = truncated(step * A, precision);
  }

  // diag(t^b u1, t^a u2); scale by eps = u2^{-1} and order as (t^a, t^b w).
  const int b = k;
  const int a = B(1, 1).valuation();
  const LaurentPoly u1 = unit_part(B(0, 0));
  const LaurentPoly u2 = unit_part(B(1, 1));
  const LaurentPoly epsilon = invert_unit(u2, precision);
  const LaurentPoly w = (u1 * epsilon).truncated(precision);
  A = truncated(swap_matrix() * A, precision);

  Diagonalization out;
  out.inv = PhiInvariant{a, b, residue_class(w)};
  out.A = A;
  out.epsilon = epsilon;
  out.w = w;
  out.precision = precision;
  return out;
}

CoverType covering_type(const PhiInvariant& inv) {
  if ((inv.a - inv.b) % 2 != 0) return CoverType::RamifiedCover;
  // diag(t^a, t^b w) with a - b even is isotropic over F iff -w is a square.
  const bool minus_one_square = FqElem::from_int(-1).is_nonzero_square();
  const bool w_square = inv.delta == SquareClass::Square;
  return minus_one_square == w_square ? CoverType::SplitCover : CoverType::UnramifiedNonsplitCover;
}

int isotropic_line_count(const FqSymForm& form) {
  const FqElem det = form.x * form.z - form.y * form.y;
  if (form.x.is_zero() && form.y.is_zero() && form.z.is_zero()) return static_cast<int>(current_q()) + 1;
  if (det.is_zero()) return 1;
  return (-det).is_nonzero_square() ? 2 : 0;
}

}  // namespace wald
