#include <doctest.h>

#include <set>

#include "support.hpp"
#include "wald/context.hpp"
#include "wald/error.hpp"
#include "wald/lattice.hpp"

using namespace wald;

namespace {

Mat2 columns(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c, const LaurentPoly& d) {
  Mat2 m;
  m << a, c, b, d;  // columns (a, b) and (c, d)
  return m;
}

long count_formula(long q, int d) {
  long n = q + 1;
  for (int i = 1; i < d; ++i) n *= q;
  return n;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("coweight parsing") {
    CHECK(Coweight::parse("(2,-1)") == Coweight{2, -1});
    CHECK(Coweight::parse(" ( 3 , 3 ) ") == Coweight{3, 3});
    CHECK_THROWS_AS(Coweight::parse("(1,2)"), Error);
    CHECK_THROWS_AS(Coweight::parse("1,2"), Error);
    CHECK_THROWS_AS(Coweight::make(0, 1), Error);
  }

  TEST_CASE("canonicalize examples") {
    ModulusScope scope(3);
    const LaurentPoly t = LaurentPoly::t_pow(1);
    CHECK(canonicalize(Mat2::Identity()) == Lattice2());
    const Lattice2 L = canonicalize(columns(LaurentPoly::t_pow(2), 0, 1, 1));
    CHECK(L.a() == 2);
    CHECK(L.b() == 0);
    CHECK(L.c() == LaurentPoly(1));
    CHECK(canonicalize(columns(1, 1, LaurentPoly::t_pow(2), 0)) == L);
    CHECK(canonicalize(columns(LaurentPoly::t_pow(2) * LaurentPoly(2), 0, LaurentPoly(1) + t, LaurentPoly(1) + t)) == L);
    CHECK_THROWS_AS(canonicalize(columns(1, 1, 1, 1)), Error);
  }

  TEST_CASE("canonicalize is idempotent and span invariant") {
    ModulusScope scope(5);
    for (int i = 0; i < 100; ++i) {
      Mat2 g;
      g << testsupport::random_poly(static_cast<int>(testsupport::uniform(-2, 2)), 3),
          testsupport::random_poly(static_cast<int>(testsupport::uniform(-2, 2)), 3),
          testsupport::random_poly(static_cast<int>(testsupport::uniform(-2, 2)), 3),
          testsupport::random_poly(static_cast<int>(testsupport::uniform(-2, 2)), 3);
      if (det2(g).is_zero()) continue;
      const Lattice2 L = canonicalize(g);
      CHECK(canonicalize(L.basis()) == L);
      CHECK(canonicalize(g * testsupport::random_unimodular(3)) == L);
      CHECK(L.det_valuation() == det2(g).valuation());
      const Mat2 id = L.basis() * L.inverse_basis();
      CHECK(id == Mat2::Identity());
    }
  }

  TEST_CASE("relative position examples") {
    ModulusScope scope(3);
    const Lattice2 O2;
    const Lattice2 L = Lattice2::from_triangular(2, 1, LaurentPoly(1));
    CHECK(relative_position(L, L) == Coweight{0, 0});
    CHECK(relative_position(L, L.scaled(1)) == Coweight{1, 1});
    CHECK(relative_position(O2, Lattice2::from_triangular(2, 0, LaurentPoly())) == Coweight{2, 0});
    CHECK(relative_position(Lattice2::from_triangular(2, 0, LaurentPoly()), O2) == Coweight{0, -2});
  }

  TEST_CASE("relative position is GL2(O)-invariant and antisymmetric") {
    ModulusScope scope(3);
    for (int i = 0; i < 100; ++i) {
      const Lattice2 L = Lattice2::from_triangular(static_cast<int>(testsupport::uniform(-2, 3)),
                                                   static_cast<int>(testsupport::uniform(-2, 3)),
                                                   testsupport::random_poly(-2, 5));
      const Lattice2 M = Lattice2::from_triangular(static_cast<int>(testsupport::uniform(-2, 3)),
                                                   static_cast<int>(testsupport::uniform(-2, 3)),
                                                   testsupport::random_poly(-2, 5));
      const Mat2 U = testsupport::random_unimodular(3);
      const Coweight p = relative_position(L, M);
      CHECK(relative_position(transform(U, L), transform(U, M)) == p);
      CHECK(relative_position(M, L) == Coweight{-p.a2, -p.a1});
      CHECK(p.degree() == M.det_valuation() - L.det_valuation());
    }
  }

  TEST_CASE("enumeration examples") {
    ModulusScope scope(3);
    CHECK(enumerate_in_position(Lattice2(), {0, 0}) == std::vector<Lattice2>{Lattice2()});
    CHECK(enumerate_in_position(Lattice2(), {1, 0}).size() == 4);
    CHECK(enumerate_in_position(Lattice2(), {2, 0}).size() == 12);
    CHECK(closure_members(Lattice2(), {1, 1}) == std::vector<Lattice2>{Lattice2().scaled(1)});
    CHECK(closure_members(Lattice2(), {2, 0}).size() == 13);
    CHECK(closure_members(Lattice2(), {1, 0}) == enumerate_in_position(Lattice2(), {1, 0}));
  }

  TEST_CASE("count formula q^(d-1)(q+1)") {
    for (std::uint32_t q : {3u, 5u}) {
      ModulusScope scope(q);
      for (int d = 1; d <= 4; ++d) CHECK(static_cast<long>(enumerate_in_position(Lattice2(), {d, 0}).size()) == count_formula(q, d));
    }
  }

  TEST_CASE("enumeration is exact, sorted and duplicate free from any base") {
    ModulusScope scope(3);
    const std::vector<Lattice2> bases = {Lattice2(), Lattice2::from_triangular(2, 0, LaurentPoly(1)),
                                         Lattice2::from_triangular(1, -1, LaurentPoly::from_coeffs(-1, {2}))};
    const std::vector<Coweight> positions = {{1, 0}, {2, 0}, {2, 1}, {3, -1}, {0, -2}, {1, 1}};
    for (const Lattice2& L : bases) {
      for (const Coweight& w : positions) {
        const auto list = enumerate_in_position(L, w);
        CHECK(std::is_sorted(list.begin(), list.end()));
        CHECK(std::set<Lattice2>(list.begin(), list.end()).size() == list.size());
        for (const Lattice2& M : list) CHECK(relative_position(L, M) == w);
        long expected = w.length() == 0 ? 1 : count_formula(3, w.length());
        CHECK(static_cast<long>(list.size()) == expected);
      }
    }
  }

  TEST_CASE("closure membership is symmetric") {
    ModulusScope scope(3);
    const Lattice2 L = Lattice2::from_triangular(1, 0, LaurentPoly(2));
    for (const Coweight& w : {Coweight{2, 0}, Coweight{3, 1}, Coweight{2, -1}}) {
      for (const Lattice2& M : closure_members(L, w)) {
        const auto back = closure_members(M, Coweight{-w.a2, -w.a1});
        CHECK(std::find(back.begin(), back.end(), L) != back.end());
      }
    }
  }
}
