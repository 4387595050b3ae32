#pragma once

#include <string_view>

#include "wald/matrix.hpp"
#include "wald/series.hpp"

namespace wald {

/// Symmetric 2x2 matrix [[x, y], [y, z]] over O with nonzero determinant.
struct SymMatrixO {
  LaurentPoly x;
  LaurentPoly y;
  LaurentPoly z;

  /// Validates integrality and det != 0 (throws ConfigInvalid / SingularGenerators).
  static SymMatrixO make(LaurentPoly x, LaurentPoly y, LaurentPoly z);

  LaurentPoly det() const { return x * z - y * y; }
  Mat2 matrix() const;
};

enum class SquareClass { Square, NonSquare };
std::string_view to_string(SquareClass c);

/// Similitude invariant: (a, b) with a >= b >= 0 and the residue square class
/// of the normalized discriminant det(B) / t^(a+b).
struct PhiInvariant {
  int a = 0;
  int b = 0;
  SquareClass delta = SquareClass::Square;

  friend bool operator==(const PhiInvariant&, const PhiInvariant&) = default;
  friend auto operator<=>(const PhiInvariant&, const PhiInvariant&) = default;
};

struct Diagonalization {
  PhiInvariant inv;
  /// A * B * A^t * epsilon == diag(t^a, t^b * w) mod t^precision.
  Mat2 A;
  LaurentPoly epsilon;
  LaurentPoly w;
  int precision = 0;
};

/// 2 val(det B) + 2.
int default_precision(const SymMatrixO& form);

/// Reduces B under B -> A B A^t eps (A in GL2(O), eps in O*), working
/// modulo t^precision.  Requires odd q.  Throws PrecisionExhausted when
/// val(det B) >= precision.
Diagonalization diagonalize(const SymMatrixO& form, int precision);

/// Residue square class of a unit of O.
SquareClass residue_class(const LaurentPoly& unit);

enum class CoverType { SplitCover, RamifiedCover, UnramifiedNonsplitCover };
std::string_view to_string(CoverType c);

/// Ramified iff a - b is odd.  For even a - b the cover splits iff
/// -delta is a square (the hyperbolic plane has delta = class of -1), and is
/// the unramified quadratic extension otherwise.  The latter cannot occur
/// over an algebraically closed residue field.
CoverType covering_type(const PhiInvariant& inv);

/// Symmetric form x u^2 + 2 y u v + z v^2 on F_q^2.
struct FqSymForm {
  FqElem x;
  FqElem y;
  FqElem z;
};

/// Number of isotropic lines: q + 1 (zero form), 1 (rank one), 2 or 0
/// (nondegenerate split / anisotropic).
int isotropic_line_count(const FqSymForm& form);

}  // namespace wald
