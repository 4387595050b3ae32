#pragma once

#include <json.hpp>

#include "wald/hecke.hpp"
#include "wald/lattice.hpp"
#include "wald/quadform.hpp"
#include "wald/scalars.hpp"
#include "wald/series.hpp"
#include "wald/torus.hpp"
#include "wald/waldspurger.hpp"

namespace wald {

using json = nlohmann::json;

/// Integers that fit in int64 are written as numbers, larger ones as decimal
/// strings.
json to_json(const mpz_class& z);
json to_json(const Rational& x);
/// Sorted list of {ea, eb, eg, num_a, den_a, num_b, den_b}.
json to_json(const LaurentScalar& x);
/// {offset, coeffs}.
json to_json(const LaurentPoly& p);
/// {a, b, c}.
json to_json(const Lattice2& L);
/// [a1, a2].
json to_json(const Coweight& w);
/// {terms: [{coweight, scalar}]}.
json to_json(const HeckeElement& h);
/// [{m, value}] in increasing m.
json to_json(const WaldFunction& f);
json to_json(const ScalarMatrix& M);
/// {kind, m, chi}.
json to_json(EtaleKind kind, const Normalized& n);
/// {a, b, delta}.
json to_json(const PhiInvariant& inv);

LaurentScalar laurent_scalar_from_json(const json& j);
Rational rational_from_json(const json& j);

/// Accepts an integer, a coefficient list [c0, c1, ...] (power series in t),
/// {offset, coeffs}, or a string in the "c*t^k + ..." form.
LaurentPoly laurent_poly_from_json(const json& j);

/// Parses "c*t^k + c*t^k + ..." (terms "c", "t", "t^k", "c*t", "-c*t^k").
LaurentPoly parse_laurent_poly(const std::string& text);

}  // namespace wald
