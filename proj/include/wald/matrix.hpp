#pragma once

#include <Eigen/Core>

#include "wald/scalars.hpp"
#include "wald/series.hpp"

namespace Eigen {

// The exact scalar types used in matrices.  None of them is a field in
// Eigen's sense (no sqrt, no epsilon); only ring operations are used.
// digits10 is only there so matrices can be streamed.
template <>
struct NumTraits<wald::LaurentPoly> : GenericNumTraits<wald::LaurentPoly> {
  using Real = wald::LaurentPoly;
  using NonInteger = wald::LaurentPoly;
  using Nested = wald::LaurentPoly;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 4, MulCost = 8 };
  static int digits10() { return 0; }
};

template <>
struct NumTraits<wald::LaurentScalar> : GenericNumTraits<wald::LaurentScalar> {
  using Real = wald::LaurentScalar;
  using NonInteger = wald::LaurentScalar;
  using Nested = wald::LaurentScalar;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 8, MulCost = 16 };
  static int digits10() { return 0; }
};

template <>
struct NumTraits<wald::Rational> : GenericNumTraits<wald::Rational> {
  using Real = wald::Rational;
  using NonInteger = wald::Rational;
  using Nested = wald::Rational;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 4, MulCost = 4 };
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace wald {

using Mat2 = Eigen::Matrix<LaurentPoly, 2, 2>;
using Vec2 = Eigen::Matrix<LaurentPoly, 2, 1>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ScalarMatrix = DenseMatrix<LaurentScalar>;
using RationalMatrix = DenseMatrix<Rational>;

/// Units of the Laurent-monomial ring are exactly the monomials.
inline LaurentScalar inverse(const LaurentScalar& x) { return monomial_invert(x); }

inline LaurentPoly det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

template <typename Derived>
bool is_upper_triangular(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = j + 1; i < m.rows(); ++i) {
      if (m(i, j) != Scalar(0)) return false;
    }
  }
  return true;
}

/// Back substitution for upper-triangular `u`; the diagonal entries must be
/// invertible in Scalar (via `inverse`).  Entries below the diagonal are
/// ignored.
template <typename Scalar>
DenseVector<Scalar> solve_upper(const DenseMatrix<Scalar>& u, const DenseVector<Scalar>& rhs) {
  const Eigen::Index n = u.rows();
  DenseVector<Scalar> x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Scalar acc = rhs(i);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= u(i, j) * x(j);
    x(i) = acc * inverse(u(i, i));
  }
  return x;
}

}  // namespace wald
