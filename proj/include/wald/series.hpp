#pragma once

#include <climits>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace wald {

/// Element of the prime field F_q for the session modulus.
class FqElem {
 public:
  FqElem() = default;
  /// Reduces any integer into [0, q).
  static FqElem from_int(long long v);

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  /// Multiplicative inverse; throws NotInvertible on 0.
  FqElem inverse() const;
  /// Euler criterion; 0 is not reported as a square.
  bool is_nonzero_square() const;

  friend FqElem operator+(FqElem a, FqElem b);
  friend FqElem operator-(FqElem a, FqElem b);
  friend FqElem operator*(FqElem a, FqElem b);
  friend FqElem operator-(FqElem a);
  friend bool operator==(FqElem a, FqElem b) { return a.v_ == b.v_; }
  friend bool operator!=(FqElem a, FqElem b) { return a.v_ != b.v_; }

 private:
  explicit FqElem(std::uint32_t v) : v_(v) {}
  std::uint32_t v_ = 0;
};

inline constexpr int kInfiniteValuation = INT_MAX;

/// Laurent polynomial in t over F_q: sum of coeffs[i] * t^(offset + i).
/// Canonical: the first and last stored coefficients are nonzero, and the
/// zero polynomial has no coefficients and offset 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exponent, FqElem coeff);
  static LaurentPoly t_pow(int exponent);
  /// Coefficients c_0, c_1, ... of t^offset, t^(offset+1), ...; reduced mod q.
  static LaurentPoly from_coeffs(int offset, const std::vector<long long>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int offset() const { return offset_; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

  /// Lowest exponent, or kInfiniteValuation for zero.
  int valuation() const { return is_zero() ? kInfiniteValuation : offset_; }
  /// Highest exponent; undefined (INT_MIN) for zero.
  int degree() const { return is_zero() ? INT_MIN : offset_ + static_cast<int>(coeffs_.size()) - 1; }
  FqElem coeff(int exponent) const;
  /// Coefficient of the lowest term (zero for the zero polynomial).
  FqElem leading_low() const { return coeff(offset_); }

  /// Keeps only terms with exponent < bound (reduction mod t^bound O).
  LaurentPoly truncated(int bound) const;
  /// Multiplication by t^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly scaled(FqElem c) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  /// Deterministic total order: zero first, then (offset, coefficient list).
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  /// "c_k*t^k + ..." in increasing exponent order; "0" for zero.
  std::string str() const;

  std::size_t hash() const;

 private:
  void normalize();

  int offset_ = 0;
  std::vector<std::uint32_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

inline int valuation(const LaurentPoly& p) { return p.valuation(); }

/// Inverse of a unit of O modulo t^precision: offset 0, degree < precision.
/// Throws NotAUnit when val(u) != 0.
LaurentPoly invert_unit(const LaurentPoly& u, int precision);

/// u / t^val(u), the unit part of a nonzero element.
LaurentPoly unit_part(const LaurentPoly& x);

}  // namespace wald
