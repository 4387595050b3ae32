#include "wald/lattice.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "wald/context.hpp"
#include "wald/error.hpp"

namespace wald {

Coweight Coweight::make(int a1, int a2) {
  if (a1 < a2) {
    throw Error(ErrorKind::ConfigInvalid, "coweight (" + std::to_string(a1) + "," + std::to_string(a2) + ") is not dominant");
  }
  return Coweight{a1, a2};
}

Coweight Coweight::parse(const std::string& text) {
  static const std::regex pattern(R"(\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) {
    throw Error(ErrorKind::ParseError, "not a coweight: '" + text + "'");
  }
  return make(std::stoi(match[1].str()), std::stoi(match[2].str()));
}

std::string to_string(const Coweight& w) {
  return "(" + std::to_string(w.a1) + "," + std::to_string(w.a2) + ")";
}

std::ostream& operator<<(std::ostream& os, const Coweight& w) { return os << to_string(w); }

Lattice2 Lattice2::from_triangular(int a, int b, const LaurentPoly& c) {
  Lattice2 L;
  L.a_ = a;
  L.b_ = b;
  L.c_ = c.truncated(a);
  return L;
}

Mat2 Lattice2::basis() const {
  Mat2 m;
  m << LaurentPoly::t_pow(a_), c_, LaurentPoly(0), LaurentPoly::t_pow(b_);
  return m;
}

Mat2 Lattice2::inverse_basis() const {
  Mat2 m;
  m << LaurentPoly::t_pow(-a_), -c_.shifted(-a_ - b_), LaurentPoly(0), LaurentPoly::t_pow(-b_);
  return m;
}

Lattice2 Lattice2::scaled(int k) const { return from_triangular(a_ + k, b_ + k, c_.shifted(k)); }

bool operator<(const Lattice2& x, const Lattice2& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_;
  if (x.b_ != y.b_) return x.b_ < y.b_;
  return x.c_ < y.c_;
}

std::string Lattice2::str() const {
  std::ostringstream os;
  os << "L[a=" << a_ << ", b=" << b_ << ", c=" << c_ << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Lattice2& L) { return os << L.str(); }

Lattice2 canonicalize(const Mat2& generators) {
  const LaurentPoly det = det2(generators);
  if (det.is_zero()) throw Error(ErrorKind::SingularGenerators, "generator matrix is singular");

  // The second-coordinate projection of L is t^b O; pick a column attaining it.
  const int v0 = generators(1, 0).valuation();
  const int v1 = generators(1, 1).valuation();
  const int j = v1 <= v0 ? 1 : 0;
  const int b = std::min(v0, v1);
  const int a = det.valuation() - b;

  // Rescale that column by the inverse unit so its second coordinate is t^b;
  // its first coordinate is then c, needed only modulo t^a.
  const LaurentPoly& x = generators(0, j);
  LaurentPoly c;
  if (!x.is_zero() && x.valuation() < a) {
    const LaurentPoly u = unit_part(generators(1, j));
    c = (x * invert_unit(u, a - x.valuation())).truncated(a);
  }
  return Lattice2::from_triangular(a, b, c);
}

Lattice2 transform(const Mat2& g, const Lattice2& lattice) {
  Mat2 product = g * lattice.basis();
  return canonicalize(product);
}

Coweight relative_position(const Lattice2& from, const Lattice2& to) {
  // M = B_from^{-1} B_to is upper triangular with monomial diagonal.
  const int d11 = to.a() - from.a();
  const int d22 = to.b() - from.b();
  const LaurentPoly m12 = to.c().shifted(-from.a()) - from.c().shifted(to.b() - from.a() - from.b());
  const int a2 = std::min({d11, d22, m12.valuation()});
  const int a1 = d11 + d22 - a2;
  return Coweight{a1, a2};
}

namespace {

/// Visits every polynomial of degree < n over F_q (with nonnegative
/// exponents), in lexicographic order of the coefficient vector read from the
/// top coefficient down.
template <typename Visitor>
void for_each_residue(int n, Visitor&& visit) {
  const long long q = current_q();
  std::vector<long long> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(LaurentPoly::from_coeffs(0, digits));
    int k = 0;
    while (k < n) {
      if (++digits[static_cast<std::size_t>(k)] < q) break;
      digits[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == n) return;
  }
}

/// Sublattices of O^2 of colength n; `cyclic_only` keeps those with quotient
/// O/t^n.
std::vector<Lattice2> standard_sublattices(int n, bool cyclic_only) {
  std::vector<Lattice2> out;
  for (int i = 0; i <= n; ++i) {
    const int b = n - i;
    for_each_residue(i, [&](const LaurentPoly& c) {
      // Elementary divisor a2 = min valuation of the basis entries.
      if (cyclic_only && n > 0 && std::min({i, b, c.valuation()}) != 0) return;
      out.push_back(Lattice2::from_triangular(i, b, c));
    });
  }
  return out;
}

std::vector<Lattice2> transport(const Lattice2& base, const std::vector<Lattice2>& standard, int shift) {
  std::vector<Lattice2> out;
  out.reserve(standard.size());
  for (const Lattice2& s : standard) {
    // B_base * t^shift * B_s stays upper triangular with monomial diagonal.
    const int a = base.a() + s.a() + shift;
    const int b = base.b() + s.b() + shift;
    const LaurentPoly c = s.c().shifted(base.a() + shift) + base.c().shifted(s.b() + shift);
    out.push_back(Lattice2::from_triangular(a, b, c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Lattice2> enumerate_in_position(const Lattice2& lattice, const Coweight& position) {
  return transport(lattice, standard_sublattices(position.length(), true), position.a2);
}

std::vector<Lattice2> closure_members(const Lattice2& lattice, const Coweight& position) {
  return transport(lattice, standard_sublattices(position.length(), false), position.a2);
}

}  // namespace wald
