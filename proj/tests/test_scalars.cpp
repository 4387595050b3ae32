#include <doctest.h>

#include "support.hpp"
#include "wald/context.hpp"
#include "wald/error.hpp"
#include "wald/scalars.hpp"

using namespace wald;

namespace {

LaurentScalar a() { return LaurentScalar::var(Var::Alpha); }
LaurentScalar b() { return LaurentScalar::var(Var::Beta); }
LaurentScalar g() { return LaurentScalar::var(Var::Gamma); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ConfigInvalid;
}

}  // namespace

TEST_SUITE("scalars") {
  TEST_CASE("rational canonical form") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(kind_of([] { Rational::parse("1/0"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { Rational::parse("x"); }) == ErrorKind::ParseError);
  }

  TEST_CASE("modulus scope nests and restores") {
    CHECK_FALSE(has_modulus());
    CHECK(kind_of([] { current_q(); }) == ErrorKind::NoModulus);
    {
      ModulusScope outer(3);
      CHECK(current_q() == 3);
      {
        ModulusScope inner(5);
        CHECK(current_q() == 5);
      }
      CHECK(current_q() == 3);
    }
    CHECK_FALSE(has_modulus());
    CHECK(kind_of([] { ModulusScope bad(9); }) == ErrorKind::ConfigInvalid);
    CHECK(kind_of([] { ModulusScope bad(2); }) == ErrorKind::ConfigInvalid);
  }

  TEST_CASE("arithmetic examples") {
    ModulusScope scope(3);
    CHECK(a() + a() == LaurentScalar(2) * a());
    const LaurentScalar rr = LaurentScalar::r() * LaurentScalar::r();
    CHECK(rr == LaurentScalar(3));
    CHECK(rr.is_rational());
    CHECK((a() + b()) * (a() - b()) == a() * a() - b() * b());
    CHECK((a() - a()).is_zero());
  }

  TEST_CASE("monomial_invert") {
    ModulusScope scope(3);
    const LaurentScalar qa2 = LaurentScalar(3) * pow(a(), 2);
    CHECK(monomial_invert(qa2) == LaurentScalar(Rational(1, 3)) * pow(a(), -2));
    const LaurentScalar rg = LaurentScalar::r() * g();
    CHECK(monomial_invert(rg) == LaurentScalar(SqrtQ(Rational(0), Rational(1, 3))) * pow(g(), -1));
    CHECK(kind_of([] { monomial_invert(a() + b()); }) == ErrorKind::NotAMonomial);
    CHECK(kind_of([] { monomial_invert(LaurentScalar()); }) == ErrorKind::NotAMonomial);
  }

  TEST_CASE("specialize") {
    ModulusScope scope(3);
    Assignment s;
    s.alpha = Rational(2);
    s.beta = Rational(3);
    CHECK(specialize(a() * b(), s) == Rational(6));
    Assignment h;
    h.gamma = Rational(1, 2);
    CHECK(specialize(pow(g(), -1), h) == Rational(2));
    Assignment z;
    z.alpha = Rational(1);
    z.beta = Rational(0);
    CHECK(kind_of([&] { specialize(a() + b(), z); }) == ErrorKind::ZeroAssignment);
    CHECK(kind_of([&] { specialize(g(), s); }) == ErrorKind::UnassignedVariable);
    CHECK(kind_of([&] { specialize(LaurentScalar::r() * a(), s); }) == ErrorKind::ResidualSqrtQ);
    Assignment with_r = s;
    with_r.r = Rational(5);
    CHECK(specialize(LaurentScalar::r() * a(), with_r) == Rational(10));
  }

  TEST_CASE("monomial_count") {
    ModulusScope scope(3);
    const VarSet ab = VarSet::of({Var::Alpha, Var::Beta});
    CHECK(monomial_count(pow(a(), 2) * b() + a() * pow(b(), 2), ab) == 2);
    CHECK(monomial_count(LaurentScalar(), ab) == 0);
    CHECK(monomial_count(LaurentScalar::r() * pow(g(), 3) + LaurentScalar(3) * pow(g(), 3), VarSet::of({Var::Gamma})) == 1);
    CHECK(monomial_count(a() * g() + a(), VarSet::of({Var::Alpha})) == 1);
  }

  TEST_CASE("ring axioms and specialization homomorphism on random inputs") {
    ModulusScope scope(5);
    Assignment s;
    s.alpha = Rational(2, 3);
    s.beta = Rational(-5);
    s.gamma = Rational(7, 2);
    for (int i = 0; i < 100; ++i) {
      const LaurentScalar x = testsupport::random_scalar(3);
      const LaurentScalar y = testsupport::random_scalar(3);
      const LaurentScalar z = testsupport::random_scalar(2);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK(x + y == y + x);
    }
    // Homomorphism checked on r-free elements.
    for (int i = 0; i < 100; ++i) {
      LaurentScalar x;
      LaurentScalar y;
      for (int k = 0; k < 3; ++k) {
        const Exponent e{static_cast<int>(testsupport::uniform(-2, 2)), static_cast<int>(testsupport::uniform(-2, 2)),
                         static_cast<int>(testsupport::uniform(-2, 2))};
        x += LaurentScalar::monomial(e, SqrtQ(testsupport::random_rational()));
        y += LaurentScalar::monomial(e, SqrtQ(testsupport::random_rational()));
      }
      CHECK(specialize(x * y, s) == specialize(x, s) * specialize(y, s));
      CHECK(specialize(x + y, s) == specialize(x, s) + specialize(y, s));
    }
  }

  TEST_CASE("monomial_invert is a two-sided inverse") {
    ModulusScope scope(7);
    for (int i = 0; i < 50; ++i) {
      const LaurentScalar x = testsupport::random_scalar(1);
      if (x.is_zero()) continue;
      CHECK(x * monomial_invert(x) == LaurentScalar(1));
      CHECK(monomial_invert(x) * x == LaurentScalar(1));
    }
  }

  TEST_CASE("sqrt q arithmetic") {
    ModulusScope scope(5);
    const SqrtQ x(Rational(1), Rational(2));
    CHECK(x * inverse(x) == SqrtQ(1));
    CHECK(SqrtQ::r() * SqrtQ::r() == SqrtQ(5));
  }
}
