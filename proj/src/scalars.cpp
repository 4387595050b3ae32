#include "wald/scalars.hpp"

#include <set>
#include <sstream>

#include "wald/context.hpp"
#include "wald/error.hpp"

namespace wald {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class v;
  if (text.empty() || v.set_str(text, 10) != 0 || v.get_den() == 0) {
    throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
  }
  v.canonicalize();
  return Rational(v);
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::ZeroCoefficient, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& x, int e) {
  if (e < 0) return pow(inverse(x), -e);
  Rational result(1);
  Rational base = x;
  for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
    if (k & 1U) result *= base;
    base *= base;
  }
  return result;
}

Rational inverse(const Rational& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroCoefficient, "inverse of zero");
  return Rational(1) / x;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

SqrtQ& SqrtQ::operator+=(const SqrtQ& o) {
  a += o.a;
  b += o.b;
  return *this;
}

SqrtQ& SqrtQ::operator-=(const SqrtQ& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

SqrtQ& SqrtQ::operator*=(const SqrtQ& o) {
  // (a + b r)(c + d r) = (ac + q bd) + (ad + bc) r
  Rational na = a * o.a;
  if (!b.is_zero() && !o.b.is_zero()) na += Rational(static_cast<long>(current_q())) * b * o.b;
  Rational nb = a * o.b + b * o.a;
  a = std::move(na);
  b = std::move(nb);
  return *this;
}

SqrtQ inverse(const SqrtQ& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroCoefficient, "inverse of zero in Q(sqrt q)");
  if (x.b.is_zero()) return SqrtQ(inverse(x.a));
  // q is not a rational square, so the norm is nonzero.
  Rational norm = x.a * x.a - Rational(static_cast<long>(current_q())) * x.b * x.b;
  return SqrtQ(x.a / norm, -x.b / norm);
}

std::ostream& operator<<(std::ostream& os, const SqrtQ& x) {
  if (x.b.is_zero()) return os << x.a;
  if (x.a.is_zero()) {
    if (x.b == Rational(1)) return os << "r";
    return os << x.b << "*r";
  }
  return os << "(" << x.a << (x.b.sign() > 0 ? " + " : " - ")
            << (x.b.sign() > 0 ? x.b : -x.b) << "*r)";
}

VarSet VarSet::of(std::initializer_list<Var> vars) {
  VarSet s;
  for (Var v : vars) s.bits |= static_cast<std::uint8_t>(1U << static_cast<int>(v));
  return s;
}

LaurentScalar::LaurentScalar(int v) : LaurentScalar(SqrtQ(v)) {}
LaurentScalar::LaurentScalar(const Rational& v) : LaurentScalar(SqrtQ(v)) {}
LaurentScalar::LaurentScalar(const SqrtQ& v) {
  if (!v.is_zero()) terms_.emplace(Exponent{0, 0, 0}, v);
}

LaurentScalar LaurentScalar::monomial(const Exponent& e, const SqrtQ& coeff) {
  LaurentScalar x;
  if (!coeff.is_zero()) x.terms_.emplace(e, coeff);
  return x;
}

LaurentScalar LaurentScalar::var(Var v, int power) {
  Exponent e{0, 0, 0};
  e[static_cast<int>(v)] = power;
  return monomial(e);
}

bool LaurentScalar::is_rational() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return e == Exponent{0, 0, 0} && c.b.is_zero();
}

SqrtQ LaurentScalar::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? SqrtQ() : it->second;
}

void LaurentScalar::add_term(const Exponent& e, const SqrtQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentScalar operator*(const LaurentScalar& x, const LaurentScalar& y) {
  LaurentScalar out;
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      out.add_term({ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2]}, cx * cy);
    }
  }
  return out;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) { return *this = *this * o; }

LaurentScalar operator-(LaurentScalar x) {
  for (auto& [e, c] : x.terms_) c = -c;
  return x;
}

std::string LaurentScalar::str() const {
  if (terms_.empty()) return "0";
  static constexpr const char* kNames[3] = {"a", "b", "g"};
  std::ostringstream os;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool unit_coeff = c == SqrtQ(1);
    bool constant = e == Exponent{0, 0, 0};
    if (!unit_coeff || constant) os << c;
    bool need_star = !unit_coeff;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << kNames[i];
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentScalar& x) { return os << x.str(); }

LaurentScalar monomial_invert(const LaurentScalar& x) {
  if (x.terms().size() != 1) {
    throw Error(ErrorKind::NotAMonomial, "cannot invert '" + x.str() + "'");
  }
  const auto& [e, c] = *x.terms().begin();
  return LaurentScalar::monomial({-e[0], -e[1], -e[2]}, inverse(c));
}

LaurentScalar pow(const LaurentScalar& x, int e) {
  if (e < 0) return pow(monomial_invert(x), -e);
  LaurentScalar result(1);
  LaurentScalar base = x;
  for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
    if (k & 1U) result *= base;
    if (k > 1) base *= base;
  }
  return result;
}

Rational specialize(const LaurentScalar& x, const Assignment& assignment) {
  const std::optional<Rational>* values[3] = {&assignment.alpha, &assignment.beta, &assignment.gamma};
  static constexpr const char* kNames[3] = {"alpha", "beta", "gamma"};
  Rational total(0);
  for (const auto& [e, c] : x.terms()) {
    Rational term(1);
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!values[i]->has_value()) {
        throw Error(ErrorKind::UnassignedVariable, std::string(kNames[i]) + " occurs but has no value");
      }
      if ((*values[i])->is_zero()) {
        throw Error(ErrorKind::ZeroAssignment, std::string(kNames[i]) + " assigned zero");
      }
      term *= pow(**values[i], e[i]);
    }
    Rational coeff = c.a;
    if (!c.b.is_zero()) {
      if (!assignment.r) throw Error(ErrorKind::ResidualSqrtQ, "r-part in '" + x.str() + "' without an r value");
      coeff += c.b * *assignment.r;
    }
    total += coeff * term;
  }
  return total;
}

std::size_t monomial_count(const LaurentScalar& x, VarSet vars) {
  std::set<Exponent> seen;
  for (const auto& [e, c] : x.terms()) {
    Exponent p{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
      if (vars.contains(static_cast<Var>(i))) p[i] = e[i];
    }
    seen.insert(p);
  }
  return seen.size();
}

}  // namespace wald
