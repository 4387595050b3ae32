#include <doctest.h>

#include <set>

#include "support.hpp"
#include "wald/context.hpp"
#include "wald/error.hpp"
#include "wald/torus.hpp"

using namespace wald;

namespace {

const LaurentScalar kAlpha = LaurentScalar::var(Var::Alpha);
const LaurentScalar kBeta = LaurentScalar::var(Var::Beta);
const LaurentScalar kGamma = LaurentScalar::var(Var::Gamma);

Mat2 diag(const LaurentPoly& x, const LaurentPoly& y) {
  Mat2 m;
  m << x, 0, 0, y;
  return m;
}

// random algebra unit x + y s (or x e1 + y e2)
Mat2 random_torus_unit(EtaleKind kind) {
  while (true) {
    const LaurentPoly x = testsupport::random_poly(0, 3);
    const LaurentPoly y = testsupport::random_poly(0, 3);
    try {
      const TorusClass c = torus_class(kind, x, y);
      if (c.is_identity()) return embed(kind, x, y);
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_SUITE("torus") {
  TEST_CASE("embed examples") {
    ModulusScope scope(3);
    const LaurentPoly t = LaurentPoly::t_pow(1);
    CHECK(embed(EtaleKind::Split, t, 1) == diag(t, 1));
    Mat2 s;
    s << 0, t, 1, 0;
    CHECK(embed(EtaleKind::Ramified, 0, 1) == s);
    CHECK(s * s == diag(t, t));
    CHECK_THROWS_AS(embed(EtaleKind::Split, 0, 1), Error);
  }

  TEST_CASE("torus classes") {
    ModulusScope scope(5);
    const LaurentPoly t = LaurentPoly::t_pow(1);
    CHECK(torus_class(EtaleKind::Split, t * t, LaurentPoly(2)) == TorusClass{EtaleKind::Split, 2, 0});
    CHECK(torus_class(EtaleKind::Ramified, 0, 1) == TorusClass{EtaleKind::Ramified, 1, 0});
    CHECK(torus_class(EtaleKind::Ramified, t, 0) == TorusClass{EtaleKind::Ramified, 2, 0});
    CHECK(torus_class(EtaleKind::Ramified, LaurentPoly(1), t).is_identity());
  }

  TEST_CASE("b_ex examples") {
    ModulusScope scope(3);
    CHECK(b_ex(EtaleKind::Split, Lattice2()).m == 0);
    CHECK(b_ex(EtaleKind::Split, Lattice2()).u.is_identity());
    for (int m = 0; m <= 4; ++m) {
      const ExtendedLattice e = b_ex(EtaleKind::Split, orbit_representative(EtaleKind::Split, m));
      CHECK(e.m == m);
      CHECK(e.u.is_identity());
    }
    const ExtendedLattice r = b_ex(EtaleKind::Ramified, Lattice2::from_triangular(0, 2, 0));
    CHECK(r.m == 2);
    CHECK(r.u.is_identity());
  }

  TEST_CASE("orbit representatives") {
    ModulusScope scope(3);
    CHECK(orbit_representative(EtaleKind::Split, 0) == Lattice2());
    Mat2 g;
    g << LaurentPoly::t_pow(2), 1, 0, 1;
    CHECK(orbit_representative(EtaleKind::Split, 2) == canonicalize(g));
    CHECK(orbit_representative(EtaleKind::Ramified, 1) == Lattice2::from_triangular(0, 1, 0));
    CHECK(orbit_representative(EtaleKind::Ramified, 0) == Lattice2());
  }

  TEST_CASE("normalize examples") {
    ModulusScope scope(3);
    for (EtaleKind kind : {EtaleKind::Split, EtaleKind::Ramified}) {
      for (int m = 0; m <= 4; ++m) {
        const Normalized n = normalize(kind, orbit_representative(kind, m));
        CHECK(n.m == m);
        CHECK(n.chi == LaurentScalar(1));
      }
    }
    CHECK(normalize(EtaleKind::Split, Lattice2().scaled(1)).chi == kAlpha * kBeta);
    CHECK(normalize(EtaleKind::Ramified, Lattice2().scaled(1)).chi == kGamma * kGamma);
    CHECK(central_character(EtaleKind::Split) == kAlpha * kBeta);
    // span{(t^3, 0), (t, 1)}: open stratum m = a - val(c) = 2, u = (t, 1)
    const Normalized n = normalize(EtaleKind::Split, Lattice2::from_triangular(3, 0, LaurentPoly::t_pow(1)));
    CHECK(n.m == 2);
    CHECK(n.chi == kAlpha);
  }

  TEST_CASE("character values") {
    CHECK(character_value({EtaleKind::Split, 2, -1}) == kAlpha * kAlpha * monomial_invert(kBeta));
    CHECK(character_value({EtaleKind::Ramified, 3, 0}) == pow(kGamma, 3));
    CHECK(character_vars(EtaleKind::Ramified).contains(Var::Gamma));
    CHECK_FALSE(character_vars(EtaleKind::Ramified).contains(Var::Alpha));
  }

  TEST_CASE("normalize is torus-equivariant") {
    for (std::uint32_t q : {3u, 5u}) {
      ModulusScope scope(q);
      for (EtaleKind kind : {EtaleKind::Split, EtaleKind::Ramified}) {
        for (int i = 0; i < 60; ++i) {
          const Lattice2 L = Lattice2::from_triangular(static_cast<int>(testsupport::uniform(-1, 4)),
                                                       static_cast<int>(testsupport::uniform(-1, 4)),
                                                       testsupport::random_poly(-1, 5));
          const Normalized base = normalize(kind, L);
          // unit of O~ keeps m and chi
          const Normalized same = normalize(kind, transform(random_torus_unit(kind), L));
          CHECK(same.m == base.m);
          CHECK(same.chi == base.chi);
          // t^(k1,k2) / s^k shifts chi by the character
          const TorusClass u{kind, static_cast<int>(testsupport::uniform(-2, 2)),
                             kind == EtaleKind::Split ? static_cast<int>(testsupport::uniform(-2, 2)) : 0};
          const Normalized moved = normalize(kind, transform(embed(u), L));
          CHECK(moved.m == base.m);
          CHECK(moved.chi == character_value(u) * base.chi);
          CHECK(b_ex(kind, L).m == base.m);
        }
      }
    }
  }

  TEST_CASE("orbit invariant classifies: same m means torus-related") {
    // brute force over units mod t^(m+1): every lattice with invariant m and
    // trivial class is a unit translate of the representative
    ModulusScope scope(3);
    for (EtaleKind kind : {EtaleKind::Split, EtaleKind::Ramified}) {
      for (int m = 0; m <= 2; ++m) {
        const Lattice2 rep = orbit_representative(kind, m);
        std::set<Lattice2> translates;
        const int terms = m + 1;
        long total = 1;
        for (int i = 0; i < 2 * terms; ++i) total *= 3;
        for (long code = 0; code < total; ++code) {
          std::vector<long long> cx, cy;
          long c = code;
          for (int i = 0; i < terms; ++i) { cx.push_back(c % 3); c /= 3; }
          for (int i = 0; i < terms; ++i) { cy.push_back(c % 3); c /= 3; }
          const LaurentPoly x = LaurentPoly::from_coeffs(0, cx);
          const LaurentPoly y = LaurentPoly::from_coeffs(0, cy);
          try {
            if (!torus_class(kind, x, y).is_identity()) continue;
          } catch (const Error&) {
            continue;
          }
          translates.insert(transform(embed(kind, x, y), rep));
        }
        // every lattice in the unit ball with invariant m and B_ex = O~ is hit
        for (int d = m; d <= m + 1; ++d) {
          for (const Lattice2& L : closure_members(Lattice2(), Coweight{d, 0})) {
            const Normalized n = normalize(kind, L);
            if (n.m == m && n.u.is_identity()) CHECK(translates.count(L) == 1);
          }
        }
      }
    }
  }

  TEST_CASE("split open stratum formula") {
    ModulusScope scope(5);
    for (int a = 1; a <= 4; ++a) {
      for (int v = 0; v < a; ++v) {
        const Lattice2 L = Lattice2::from_triangular(a, 0, LaurentPoly::t_pow(v) * LaurentPoly(2));
        CHECK(normalize(EtaleKind::Split, L).m == a - v);
      }
    }
  }
}
