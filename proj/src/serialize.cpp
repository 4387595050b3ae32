#include "wald/serialize.hpp"

#include <cctype>
#include <limits>

#include "wald/error.hpp"

namespace wald {

json to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json to_json(const Rational& x) { return json(x.str()); }

json to_json(const LaurentScalar& x) {
  json out = json::array();
  for (const auto& [e, c] : x.terms()) {
    out.push_back({{"ea", e[0]},
                   {"eb", e[1]},
                   {"eg", e[2]},
                   {"num_a", to_json(c.a.numerator())},
                   {"den_a", to_json(c.a.denominator())},
                   {"num_b", to_json(c.b.numerator())},
                   {"den_b", to_json(c.b.denominator())}});
  }
  return out;
}

json to_json(const LaurentPoly& p) { return {{"offset", p.offset()}, {"coeffs", p.coeffs()}}; }

json to_json(const Lattice2& L) { return {{"a", L.a()}, {"b", L.b()}, {"c", to_json(L.c())}}; }

json to_json(const Coweight& w) { return json::array({w.a1, w.a2}); }

json to_json(const HeckeElement& h) {
  json terms = json::array();
  for (const auto& [w, c] : h.terms()) terms.push_back({{"coweight", to_json(w)}, {"scalar", to_json(c)}});
  return {{"terms", terms}};
}

json to_json(const WaldFunction& f) {
  json out = json::array();
  for (const auto& [m, v] : f.values()) out.push_back({{"m", m}, {"value", to_json(v)}});
  return out;
}

json to_json(const ScalarMatrix& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json to_json(EtaleKind kind, const Normalized& n) {
  return {{"kind", std::string(to_string(kind))}, {"m", n.m}, {"chi", to_json(n.chi)}};
}

json to_json(const PhiInvariant& inv) {
  return {{"a", inv.a}, {"b", inv.b}, {"delta", std::string(to_string(inv.delta))}};
}

namespace {

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::ParseError, "bad integer " + j.dump());
    return z;
  }
  throw Error(ErrorKind::ParseError, "expected integer, got " + j.dump());
}

Rational ratio(const json& num, const json& den) {
  const mpz_class d = integer_from_json(den);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  return Rational(mpq_class(integer_from_json(num), d));
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(ErrorKind::ParseError, "expected rational, got " + j.dump());
}

LaurentScalar laurent_scalar_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "LaurentScalar JSON must be a list");
  LaurentScalar out;
  try {
    for (const json& term : j) {
      const Exponent e{term.at("ea").get<int>(), term.at("eb").get<int>(), term.at("eg").get<int>()};
      const SqrtQ c(ratio(term.at("num_a"), term.at("den_a")), ratio(term.at("num_b"), term.at("den_b")));
      out += LaurentScalar::monomial(e, c);
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
  return out;
}

LaurentPoly parse_laurent_poly(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
  LaurentPoly out;
  std::size_t pos = 0;
  auto fail = [&]() { throw Error(ErrorKind::ParseError, "cannot parse polynomial '" + text + "'"); };
  auto read_int = [&](long long& v) {
    const std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) fail();
    v = std::stoll(s.substr(start, pos - start));
  };
  while (pos < s.size()) {
    long long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    long long coeff = 1;
    int exponent = 0;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      read_int(coeff);
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 't') fail();
      }
    }
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        long long e = 0;
        read_int(e);
        exponent = static_cast<int>(e);
      }
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') fail();
    out += LaurentPoly::monomial(exponent, FqElem::from_int(sign * coeff));
  }
  return out;
}

LaurentPoly laurent_poly_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return LaurentPoly::from_coeffs(0, {j.get<long long>()});
    if (j.is_array()) return LaurentPoly::from_coeffs(0, j.get<std::vector<long long>>());
    if (j.is_object()) return LaurentPoly::from_coeffs(j.at("offset").get<int>(), j.at("coeffs").get<std::vector<long long>>());
    if (j.is_string()) return parse_laurent_poly(j.get<std::string>());
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
  throw Error(ErrorKind::ParseError, "cannot read polynomial from " + j.dump());
}

}  // namespace wald
