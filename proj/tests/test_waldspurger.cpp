#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "wald/context.hpp"
#include "wald/error.hpp"
#include "wald/waldspurger.hpp"

using namespace wald;

namespace {

const EtaleKind kKinds[] = {EtaleKind::Split, EtaleKind::Ramified};

LaurentScalar chi_c(EtaleKind kind) { return central_character(kind); }

WaldFunction random_function(EtaleKind kind) {
  WaldFunction f;
  const int terms = static_cast<int>(testsupport::uniform(1, 3));
  for (int i = 0; i < terms; ++i) {
    const int m = static_cast<int>(testsupport::uniform(0, 3));
    const Exponent e = kind == EtaleKind::Split
                           ? Exponent{static_cast<int>(testsupport::uniform(-1, 1)), static_cast<int>(testsupport::uniform(-1, 1)), 0}
                           : Exponent{0, 0, static_cast<int>(testsupport::uniform(-1, 1))};
    f.set(m, f.at(m) + LaurentScalar::monomial(e, SqrtQ(static_cast<int>(testsupport::uniform(1, 4)))));
  }
  return f;
}

HeckeElement random_hecke(int max_len) {
  HeckeElement h;
  for (int i = 0; i < 2; ++i) {
    const int a2 = static_cast<int>(testsupport::uniform(0, 1));
    h += HeckeElement::basis(Coweight{a2 + static_cast<int>(testsupport::uniform(0, max_len)), a2},
                             LaurentScalar(static_cast<int>(testsupport::uniform(1, 3))));
  }
  return h;
}

}  // namespace

TEST_SUITE("waldspurger") {
  TEST_CASE("function basics") {
    WaldFunction f = WaldFunction::delta(2, LaurentScalar(3));
    CHECK(f.support() == std::vector<int>{2});
    f.set(2, LaurentScalar());
    CHECK(f.is_zero());
    CHECK_THROWS_AS(f.set(-1, LaurentScalar(1)), Error);
    CHECK(parse_convention("superlattice") == ActionConvention::Superlattice);
    CHECK_THROWS_AS(parse_convention("left"), Error);
  }

  TEST_CASE("w0 and unit actions") {
    ModulusScope scope(3);
    for (EtaleKind kind : kKinds) {
      CHECK(w0() == WaldFunction::delta(0));
      CHECK(hecke_act(kind, HeckeElement::unit(), w0()) == w0());
      CHECK(hecke_act(kind, HeckeElement::basis({1, 1}), w0()) == chi_c(kind) * w0());
      CHECK(w_d(kind, 0) == w0());
    }
  }

  TEST_CASE("T(1,0) on w0, split") {
    ModulusScope scope(3);
    const WaldFunction f = hecke_act(EtaleKind::Split, HeckeElement::basis({1, 0}), w0());
    CHECK(f.support() == std::vector<int>{0, 1});
    CHECK(f.at(1).is_monomial());
  }

  TEST_CASE("w_d support and monomial counts") {
    ModulusScope scope(3);
    for (EtaleKind kind : kKinds) {
      for (int d = 0; d <= 4; ++d) {
        const WaldFunction w = w_d(kind, d);
        std::vector<int> expected(static_cast<std::size_t>(d + 1));
        std::iota(expected.begin(), expected.end(), 0);
        CHECK(w.support() == expected);
        for (int m = 0; m <= d; ++m) {
          const std::size_t count = monomial_count(w.at(m), character_vars(kind));
          CHECK(count == (kind == EtaleKind::Split ? static_cast<std::size_t>(d - m + 1) : 1u));
        }
        CHECK(hecke_act(kind, HeckeElement::basis({1, 1}), w) == chi_c(kind) * w);
      }
    }
  }

  TEST_CASE("split w2 at q = 3") {
    ModulusScope scope(3);
    const LaurentScalar a = LaurentScalar::var(Var::Alpha), b = LaurentScalar::var(Var::Beta);
    const WaldFunction w = w_d(EtaleKind::Split, 2);
    CHECK(w.at(2) == a * a * b * b);
    CHECK(w.at(1) == a * a * b + a * b * b);
    CHECK(w.at(0) == a * a + LaurentScalar(3) * a * b + b * b);
  }

  TEST_CASE("prop17 counts") {
    ModulusScope scope(3);
    CHECK(prop17_count(EtaleKind::Split, 2, 1) == 2);
    CHECK(prop17_count(EtaleKind::Split, 1, 2) == 0);
    CHECK(prop17_count(EtaleKind::Ramified, 1, 2) == 0);
    CHECK(prop17_count(EtaleKind::Ramified, 3, 1) == 1);
  }

  TEST_CASE("stratum counts") {
    ModulusScope scope(3);
    CHECK(orbit_stratum_count(EtaleKind::Split, {1, 0}, 0) == 2);
    CHECK(orbit_stratum_count(EtaleKind::Split, {1, 0}, 2) == 0);
    // (a - m + 1)(q - 1) q^(m-1) for m >= 1
    const auto h = orbit_stratum_histogram(EtaleKind::Split, {3, 0});
    CHECK(h.at(0) == 4);
    CHECK(h.at(1) == 3 * 2);
    CHECK(h.at(2) == 2 * 2 * 3);
    CHECK(h.at(3) == 1 * 2 * 9);
    CHECK(h.size() == 4);
  }

  TEST_CASE("module axiom") {
    ModulusScope scope(3);
    for (EtaleKind kind : kKinds) {
      for (int i = 0; i < 10; ++i) {
        const HeckeElement h1 = random_hecke(2), h2 = random_hecke(2);
        const WaldFunction f = random_function(kind);
        CHECK(hecke_act(kind, h1, hecke_act(kind, h2, f)) == hecke_act(kind, convolve(h1, h2), f));
      }
    }
  }

  TEST_CASE("superlattice convention is also a module") {
    ModulusScope scope(3);
    const auto conv = ActionConvention::Superlattice;
    for (EtaleKind kind : kKinds) {
      const HeckeElement t10 = HeckeElement::basis({1, 0});
      const WaldFunction f = random_function(kind);
      CHECK(hecke_act(kind, t10, hecke_act(kind, t10, f, conv), conv) == hecke_act(kind, convolve(t10, t10), f, conv));
    }
  }

  TEST_CASE("multone and cs matrices") {
    ModulusScope scope(3);
    for (EtaleKind kind : kKinds) {
      CHECK(multone_matrix(kind, 0) == ScalarMatrix::Identity(1, 1));
      const ScalarMatrix M = multone_matrix(kind, 3);
      CHECK(is_upper_triangular(M));
      for (int i = 0; i <= 3; ++i) CHECK(M(i, i).is_monomial());
      const ScalarMatrix C = cs_matrix(kind, 3);
      CHECK(is_upper_triangular(C));
      CHECK_FALSE(C(0, 1).is_zero());
      for (int d = 0; d <= 3; ++d)
        for (int m = 0; m <= d; ++m)
          CHECK(monomial_count(C(m, d), character_vars(kind)) ==
                (kind == EtaleKind::Split ? static_cast<std::size_t>(d - m + 1) : 1u));
    }
    CHECK(monomial_count(cs_matrix(EtaleKind::Split, 2)(0, 2), character_vars(EtaleKind::Split)) == 3);
  }

  TEST_CASE("ke_check") {
    ModulusScope scope(3);
    CharacterParams split{EtaleKind::Split, false, Rational(5), Rational(7, 2), Rational(1)};
    const KeReport r = ke_check(6, Rational(2, 3), split);
    CHECK(r.pass);
    CHECK(r.window >= 5);
    CHECK(r.central_ok);
    CHECK(r.e2 == Rational(35, 2) / Rational(2, 3));
    CharacterParams ram{EtaleKind::Ramified, false, Rational(1), Rational(1), Rational(-4, 3)};
    CHECK(ke_check(3, Rational(1), ram).pass);
    // e1 = e2
    CharacterParams sq{EtaleKind::Ramified, false, Rational(1), Rational(1), Rational(2)};
    CHECK(ke_check(4, Rational(2), sq).pass);
  }

  TEST_CASE("ke_check errors") {
    ModulusScope scope(3);
    CharacterParams p{EtaleKind::Split, false, Rational(1), Rational(2), Rational(1)};
    auto kind_of = [&](int D, Rational e1, CharacterParams params) {
      try {
        ke_check(D, e1, params);
      } catch (const Error& e) {
        return e.kind();
      }
      FAIL("no error");
      return ErrorKind::ParseError;
    };
    CHECK(kind_of(1, 1, p) == ErrorKind::TruncationTooSmall);
    CHECK(kind_of(3, 0, p) == ErrorKind::ZeroEigenvalue);
    CharacterParams sym = p;
    sym.symbolic = true;
    CHECK(kind_of(3, 1, sym) == ErrorKind::ConfigInvalid);
    CharacterParams zero = p;
    zero.alpha = 0;
    CHECK(kind_of(3, 1, zero) == ErrorKind::ConfigInvalid);
  }
}
