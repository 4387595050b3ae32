#include <doctest.h>

#include "support.hpp"
#include "wald/context.hpp"
#include "wald/error.hpp"
#include "wald/hecke.hpp"

using namespace wald;

namespace {

HeckeElement T(int a1, int a2) { return HeckeElement::basis(Coweight{a1, a2}); }

HeckeElement random_element(int max_len) {
  HeckeElement h;
  const int terms = static_cast<int>(testsupport::uniform(1, 3));
  for (int i = 0; i < terms; ++i) {
    const int a2 = static_cast<int>(testsupport::uniform(0, 1));
    const int len = static_cast<int>(testsupport::uniform(0, max_len));
    h += HeckeElement::basis(Coweight{a2 + len, a2}, LaurentScalar(static_cast<int>(testsupport::uniform(-3, 3))));
  }
  return h;
}

}  // namespace

TEST_SUITE("hecke") {
  TEST_CASE("element basics") {
    CHECK(T(0, 0) == HeckeElement::unit());
    CHECK((T(1, 0) - T(1, 0)).is_zero());
    CHECK((T(2, 0) + T(1, 1)).max_length() == 2);
    CHECK(HeckeElement().max_length() == -1);
    CHECK(T(1, 0).str() == "T(1,0)");
  }

  TEST_CASE("convolution examples") {
    for (std::uint32_t q : {3u, 5u}) {
      ModulusScope scope(q);
      CHECK(convolve(T(1, 1), T(1, 1)) == T(2, 2));
      CHECK(convolve(T(1, 0), T(1, 0)) == T(2, 0) + LaurentScalar(static_cast<int>(q + 1)) * T(1, 1));
      const HeckeElement h = T(2, 0) + LaurentScalar(3) * T(1, 0);
      CHECK(convolve(HeckeElement::unit(), h) == h);
      CHECK(convolve(h, HeckeElement::unit()) == h);
    }
  }

  TEST_CASE("structure constants are nonnegative and degree preserving") {
    ModulusScope scope(3);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (const auto& [nu, c] : basis_convolution(Coweight{a, 0}, Coweight{b, 0})) {
          CHECK(c > 0);
          CHECK(nu.degree() == a + b);
        }
  }

  TEST_CASE("associativity and commutativity") {
    ModulusScope scope(3);
    for (int i = 0; i < 25; ++i) {
      const HeckeElement x = random_element(2), y = random_element(2), z = random_element(2);
      CHECK(convolve(convolve(x, y), z) == convolve(x, convolve(y, z)));
      CHECK(convolve(x, y) == convolve(y, x));
    }
  }

  TEST_CASE("satake examples") {
    ModulusScope scope(3);
    CHECK(satake_basis({1, 0}) == T(1, 0));
    CHECK(satake_basis({2, 0}) == T(2, 0) + LaurentScalar(3) * T(1, 1));
    CHECK(satake_basis({2, 2}) == T(2, 2));
    CHECK(satake_basis({3, 0}) == T(3, 0) + LaurentScalar(5) * T(2, 1));
  }

  TEST_CASE("deep A-basis element requested first at a fresh modulus") {
    ModulusScope scope(7);
    const HeckeElement a4 = satake_basis({4, 0});
    CHECK(a4 == convolve(satake_basis({1, 0}), satake_basis({3, 0})) - convolve(T(1, 1), satake_basis({2, 0})));
    CHECK(a4.coeff({4, 0}) == LaurentScalar(1));
  }

  TEST_CASE("clebsch-gordan in the A basis") {
    for (std::uint32_t q : {3u, 5u}) {
      ModulusScope scope(q);
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
          HeckeElement expected;
          for (int k = 0; k <= std::min(a, b); ++k) expected += satake_basis({a + b - k, k});
          CHECK(convolve(satake_basis({a, 0}), satake_basis({b, 0})) == expected);
        }
    }
  }

  TEST_CASE("satake coordinates") {
    ModulusScope scope(3);
    const auto c = satake_coordinates(T(2, 0));
    CHECK(c.at(Coweight{2, 0}) == LaurentScalar(1));
    CHECK(c.at(Coweight{1, 1}) == LaurentScalar(-3));
    const HeckeElement h = LaurentScalar(2) * satake_basis({3, 1}) - satake_basis({1, 0});
    HeckeElement back;
    for (const auto& [w, s] : satake_coordinates(h)) back += s * satake_basis(w);
    CHECK(back == h);
  }

  TEST_CASE("central reduction") {
    ModulusScope scope(3);
    const LaurentScalar ab = LaurentScalar::var(Var::Alpha) * LaurentScalar::var(Var::Beta);
    CHECK(reduce_central(T(2, 1), EtaleKind::Split) == ab * T(1, 0));
    CHECK(reduce_central(T(1, 1), EtaleKind::Ramified) == LaurentScalar::var(Var::Gamma, 2) * T(0, 0));
  }

  TEST_CASE("schur values") {
    CHECK(schur_gl2({1, 0}, 2, 5) == Rational(7));
    CHECK(schur_gl2({1, 1}, 2, 5) == Rational(10));
    CHECK(schur_gl2({2, 0}, 2, 3) == Rational(19));
    CHECK(schur_gl2({0, -1}, 2, 4) == Rational(3, 4));
    CHECK(schur_gl2({2, 0}, 1, 1) == Rational(3));
    CHECK_THROWS_AS(schur_gl2({1, 0}, 0, 1), Error);
  }
}
