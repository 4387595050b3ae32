#include <doctest.h>

#include <sstream>

#include "wald/campaign.hpp"
#include "wald/context.hpp"
#include "wald/error.hpp"
#include "wald/interpolate.hpp"
#include "wald/serialize.hpp"

using namespace wald;

TEST_SUITE("interpolate") {
  TEST_CASE("recovers polynomials") {
    const QPolynomial p = interpolate({3, 5, 7}, {Rational(6), Rational(20), Rational(42)});
    CHECK(p.degree() == 2);
    CHECK(p(Rational(11)) == Rational(110));
    CHECK(p.str("q") == "q^2 - q");
    CHECK(interpolate({3, 5}, {4, 4}).degree() == 0);
    CHECK(interpolate({3, 5}, {0, 0}).degree() == -1);
    CHECK(interpolate({3, 5, 7}, {8, 16, 24}).str("q") == "4*q - 4");
    CHECK_THROWS_AS(interpolate({3, 3}, {1, 2}), Error);
    CHECK_THROWS_AS(interpolate({3}, {1, 2}), Error);
  }
}

TEST_SUITE("serialize") {
  TEST_CASE("round trips") {
    ModulusScope scope(5);
    const LaurentScalar x = LaurentScalar::var(Var::Alpha, 2) * LaurentScalar(Rational(3, 7)) + LaurentScalar::r() * LaurentScalar::var(Var::Gamma, -1);
    CHECK(laurent_scalar_from_json(to_json(x)) == x);
    CHECK(laurent_scalar_from_json(json::parse(to_json(x).dump())) == x);
    CHECK(rational_from_json(to_json(Rational(-5, 12))) == Rational(-5, 12));
    const LaurentPoly p = LaurentPoly::from_coeffs(-2, {1, 0, 4});
    CHECK(laurent_poly_from_json(to_json(p)) == p);
    CHECK(laurent_poly_from_json(json(7)) == LaurentPoly(2));
    CHECK(laurent_poly_from_json(json::parse("[0, 1, 3]")) == LaurentPoly::from_coeffs(1, {1, 3}));
    CHECK(parse_laurent_poly("2*t^-1 + t + 3") == LaurentPoly::from_coeffs(-1, {2, 3, 1}));
    CHECK(parse_laurent_poly("-t^2") == LaurentPoly::from_coeffs(2, {4}));
    CHECK_THROWS_AS(parse_laurent_poly("t^^2"), Error);
    CHECK(to_json(Coweight{3, -1}) == json::parse("[3, -1]"));
    CHECK(to_json(mpz_class("123456789012345678901234567890")).is_string());
  }
}

TEST_SUITE("campaign") {
  TEST_CASE("config validation") {
    SessionConfig cfg;
    cfg.q = 9;
    CHECK_THROWS_AS(run_campaign("prop17", cfg), Error);
    cfg.q = 3;
    cfg.dmax = -1;
    CHECK_THROWS_AS(run_campaign("prop17", cfg), Error);
    cfg.dmax = 2;
    CHECK_THROWS_AS(run_campaign("nonsense", cfg), Error);
    cfg.workers = 0;
    CHECK_THROWS_AS(run_campaign("prop17", cfg), Error);
  }

  TEST_CASE("prop17 report") {
    SessionConfig cfg;
    cfg.dmax = 3;
    const Report r = run_campaign("prop17", cfg);
    CHECK(r.rows.size() == 10);
    CHECK(r.all_pass());
    CHECK(r.failures() == 0);
    for (const auto& row : r.rows) CHECK_FALSE(row.provenance.empty());
  }

  TEST_CASE("counts report") {
    SessionConfig cfg;
    cfg.dmax = 3;
    const Report r = run_campaign("counts", cfg);
    CHECK(r.all_pass());
    std::vector<long> computed;
    for (const auto& row : r.rows) computed.push_back(row.computed.get<long>());
    CHECK(std::find(computed.begin(), computed.end(), 36) != computed.end());
  }

  TEST_CASE("output is independent of worker count") {
    SessionConfig cfg;
    cfg.kind = EtaleKind::Ramified;
    cfg.dmax = 3;
    cfg.D = 4;
    for (const std::string name : {"wd", "hecke-tables", "ke", "multone"}) {
      std::ostringstream one, many;
      cfg.workers = 1;
      run_campaign(name, cfg).write_ndjson(one);
      cfg.workers = 4;
      run_campaign(name, cfg).write_ndjson(many);
      CHECK(one.str() == many.str());
      CHECK_FALSE(one.str().empty());
    }
  }

  TEST_CASE("csv projection") {
    SessionConfig cfg;
    cfg.dmax = 2;
    std::ostringstream os;
    run_campaign("counts", cfg).write_csv(os);
    CHECK(os.str().rfind("campaign,cell,expected,computed,provenance,pass", 0) == 0);
  }

  TEST_CASE("superlattice convention rejected where it has no meaning") {
    SessionConfig cfg;
    cfg.convention = ActionConvention::Superlattice;
    CHECK_THROWS_AS(run_campaign("multone", cfg), Error);
    CHECK_NOTHROW(run_campaign("wd", cfg));
  }
}
