#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace wald {

/// Exact rational number in canonical reduced form (denominator > 0).
///
/// Thin value wrapper over mpq_class: operators return Rational rather than
/// GMP expression templates, so the type can sit inside Eigen matrices.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "n" or "n/d".
  static Rational parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

Rational pow(const Rational& x, int e);
Rational inverse(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Element a + b*r of Q(sqrt q), where r*r = q for the session modulus.
struct SqrtQ {
  Rational a;
  Rational b;

  SqrtQ() = default;
  SqrtQ(Rational a_, Rational b_ = Rational(0)) : a(std::move(a_)), b(std::move(b_)) {}  // NOLINT
  SqrtQ(int v) : a(v) {}                                                                  // NOLINT

  static SqrtQ r() { return SqrtQ(Rational(0), Rational(1)); }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  SqrtQ& operator+=(const SqrtQ& o);
  SqrtQ& operator-=(const SqrtQ& o);
  SqrtQ& operator*=(const SqrtQ& o);

  friend SqrtQ operator+(SqrtQ x, const SqrtQ& y) { return x += y; }
  friend SqrtQ operator-(SqrtQ x, const SqrtQ& y) { return x -= y; }
  friend SqrtQ operator*(SqrtQ x, const SqrtQ& y) { return x *= y; }
  friend SqrtQ operator-(const SqrtQ& x) { return SqrtQ(-x.a, -x.b); }
  friend bool operator==(const SqrtQ& x, const SqrtQ& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const SqrtQ& x, const SqrtQ& y) { return !(x == y); }
};

/// Multiplicative inverse in Q(sqrt q); throws ZeroCoefficient on 0.
SqrtQ inverse(const SqrtQ& x);
std::ostream& operator<<(std::ostream& os, const SqrtQ& x);

enum class Var : std::uint8_t { Alpha = 0, Beta = 1, Gamma = 2 };

/// Subset of {alpha, beta, gamma}.
struct VarSet {
  std::uint8_t bits = 0;

  static VarSet of(std::initializer_list<Var> vars);
  static VarSet all() { return VarSet{7}; }
  bool contains(Var v) const { return (bits >> static_cast<int>(v)) & 1U; }
};

/// Exponent triple (e_alpha, e_beta, e_gamma).
using Exponent = std::array<int, 3>;

/// Element of Q(sqrt q)[alpha^{+-1}, beta^{+-1}, gamma^{+-1}], stored sparsely
/// with no zero coefficients; iteration order is lexicographic in the
/// exponent triple.
class LaurentScalar {
 public:
  using Terms = std::map<Exponent, SqrtQ>;

  LaurentScalar() = default;
  LaurentScalar(int v);                // NOLINT(google-explicit-constructor)
  LaurentScalar(const Rational& v);    // NOLINT(google-explicit-constructor)
  LaurentScalar(const SqrtQ& v);       // NOLINT(google-explicit-constructor)

  static LaurentScalar monomial(const Exponent& e, const SqrtQ& coeff = SqrtQ(1));
  static LaurentScalar var(Var v, int power = 1);
  static LaurentScalar r() { return LaurentScalar(SqrtQ::r()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// True iff the value lies in Q (no variables, no r).
  bool is_rational() const;
  /// Coefficient of the given exponent (zero if absent).
  SqrtQ coeff(const Exponent& e) const;

  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);

  friend LaurentScalar operator+(LaurentScalar x, const LaurentScalar& y) { return x += y; }
  friend LaurentScalar operator-(LaurentScalar x, const LaurentScalar& y) { return x -= y; }
  friend LaurentScalar operator*(const LaurentScalar& x, const LaurentScalar& y);
  friend LaurentScalar operator-(LaurentScalar x);

  friend bool operator==(const LaurentScalar& x, const LaurentScalar& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const LaurentScalar& x, const LaurentScalar& y) { return !(x == y); }

  std::string str() const;

 private:
  void add_term(const Exponent& e, const SqrtQ& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentScalar& x);

/// Inverse of a single-term element; throws NotAMonomial / ZeroCoefficient.
LaurentScalar monomial_invert(const LaurentScalar& x);

/// x^e; negative exponents require a monomial.
LaurentScalar pow(const LaurentScalar& x, int e);

/// Numeric values for the evaluation homomorphism.  A variable left unset may
/// not occur in the evaluated element.
struct Assignment {
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  std::optional<Rational> gamma;
  std::optional<Rational> r;
};

/// Evaluates x.  Throws ZeroAssignment for a zero value of an occurring
/// variable, UnassignedVariable if one is missing, and ResidualSqrtQ when an
/// r-part survives without an r value.
Rational specialize(const LaurentScalar& x, const Assignment& assignment);

/// Number of distinct exponent projections onto `vars`.
std::size_t monomial_count(const LaurentScalar& x, VarSet vars);

}  // namespace wald
