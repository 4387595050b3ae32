#include "wald/hecke.hpp"

#include <mutex>
#include <sstream>
#include <tuple>

#include "wald/context.hpp"
#include "wald/error.hpp"

namespace wald {

HeckeElement HeckeElement::basis(const Coweight& lambda, const LaurentScalar& coeff) {
  HeckeElement h;
  h.add_term(lambda, coeff);
  return h;
}

LaurentScalar HeckeElement::coeff(const Coweight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

int HeckeElement::max_length() const {
  int n = -1;
  for (const auto& [w, c] : terms_) n = std::max(n, w.length());
  return n;
}

void HeckeElement::add_term(const Coweight& lambda, const LaurentScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElement operator*(const LaurentScalar& c, const HeckeElement& h) {
  HeckeElement out;
  for (const auto& [w, x] : h.terms_) out.add_term(w, c * x);
  return out;
}

std::string HeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != LaurentScalar(1)) os << "(" << c << ")*";
    os << "T" << to_string(w);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const HeckeElement& h) { return os << h.str(); }

namespace {

using ConvolutionKey = std::tuple<std::uint32_t, int, int, int, int>;

std::mutex& convolution_mutex() {
  static std::mutex m;
  return m;
}

std::map<ConvolutionKey, std::map<Coweight, long>>& convolution_cache() {
  static std::map<ConvolutionKey, std::map<Coweight, long>> cache;
  return cache;
}

std::map<Coweight, long> count_convolution(const Coweight& lambda, const Coweight& mu) {
  const int degree = lambda.degree() + mu.degree();
  std::vector<Coweight> candidates;
  for (int nu2 = lambda.a2 + mu.a2; 2 * nu2 <= degree; ++nu2) {
    const int nu1 = degree - nu2;
    if (nu1 <= lambda.a1 + mu.a1) candidates.push_back(Coweight{nu1, nu2});
  }
  std::vector<Lattice2> targets;
  for (const Coweight& nu : candidates) targets.push_back(Lattice2::from_triangular(nu.a1, nu.a2, LaurentPoly(0)));

  std::map<Coweight, long> counts;
  for (const Lattice2& middle : enumerate_in_position(Lattice2(), lambda)) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (relative_position(middle, targets[i]) == mu) ++counts[candidates[i]];
    }
  }
  return counts;
}

}  // namespace

const std::map<Coweight, long>& basis_convolution(const Coweight& lambda, const Coweight& mu) {
  const ConvolutionKey key{current_q(), lambda.a1, lambda.a2, mu.a1, mu.a2};
  {
    std::lock_guard<std::mutex> lock(convolution_mutex());
    auto it = convolution_cache().find(key);
    if (it != convolution_cache().end()) return it->second;
  }
  auto counts = count_convolution(lambda, mu);
  std::lock_guard<std::mutex> lock(convolution_mutex());
  // std::map never invalidates references on insert.
  return convolution_cache().emplace(key, std::move(counts)).first->second;
}

HeckeElement convolve(const HeckeElement& h1, const HeckeElement& h2) {
  HeckeElement out;
  for (const auto& [lambda, c1] : h1.terms()) {
    for (const auto& [mu, c2] : h2.terms()) {
      const LaurentScalar c = c1 * c2;
      for (const auto& [nu, count] : basis_convolution(lambda, mu)) {
        out += HeckeElement::basis(nu, c * LaurentScalar(Rational(count)));
      }
    }
  }
  return out;
}

namespace {

std::mutex& satake_mutex() {
  static std::mutex m;
  return m;
}

/// A_(d,0) for d = 0, 1, ... per modulus.
std::map<std::uint32_t, std::vector<HeckeElement>>& satake_cache() {
  static std::map<std::uint32_t, std::vector<HeckeElement>> cache;
  return cache;
}

HeckeElement satake_row(int d) {
  const std::uint32_t q = current_q();
  std::vector<HeckeElement> row;
  {
    std::lock_guard<std::mutex> lock(satake_mutex());
    row = satake_cache()[q];
  }
  if (static_cast<int>(row.size()) > d) return row[static_cast<std::size_t>(d)];
  if (row.empty()) row.push_back(HeckeElement::unit());
  if (row.size() == 1) row.push_back(HeckeElement::basis(Coweight{1, 0}));
  const HeckeElement a1 = row[1];
  const HeckeElement central = HeckeElement::basis(Coweight{1, 1});
  while (static_cast<int>(row.size()) <= d) {
    const std::size_t n = row.size() - 1;
    row.push_back(convolve(a1, row[n]) - convolve(central, row[n - 1]));
  }
  std::lock_guard<std::mutex> lock(satake_mutex());
  auto& cached = satake_cache()[q];
  if (cached.size() < row.size()) cached = row;
  return row[static_cast<std::size_t>(d)];
}

}  // namespace

HeckeElement satake_basis(const Coweight& lambda) {
  HeckeElement base = satake_row(lambda.length());
  if (lambda.a2 == 0) return base;
  return convolve(HeckeElement::basis(Coweight{lambda.a2, lambda.a2}), base);
}

std::map<Coweight, LaurentScalar> satake_coordinates(const HeckeElement& h) {
  std::map<Coweight, LaurentScalar> out;
  HeckeElement rest = h;
  while (!rest.is_zero()) {
    // The longest coweight cannot appear in any other A_nu still to be peeled.
    auto lead = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
      if (it->first.length() > lead->first.length()) lead = it;
    }
    const Coweight nu = lead->first;
    const LaurentScalar c = lead->second;
    out[nu] += c;
    rest -= c * satake_basis(nu);
  }
  return out;
}

HeckeElement reduce_central(const HeckeElement& h, EtaleKind kind) {
  const LaurentScalar chi_c = central_character(kind);
  HeckeElement out;
  for (const auto& [w, c] : h.terms()) {
    out += HeckeElement::basis(Coweight{w.length(), 0}, pow(chi_c, w.a2) * c);
  }
  return out;
}

Rational schur_gl2(const Coweight& lambda, const Rational& e1, const Rational& e2) {
  if (e1.is_zero() || e2.is_zero()) throw Error(ErrorKind::ZeroEigenvalue, "schur value at a singular torus element");
  const int n = lambda.length();
  Rational sum(0);
  for (int i = 0; i <= n; ++i) sum += pow(e1, i) * pow(e2, n - i);
  return pow(e1 * e2, lambda.a2) * sum;
}

}  // namespace wald
