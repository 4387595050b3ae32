#include "wald/campaign.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "wald/context.hpp"
#include "wald/error.hpp"
#include "wald/form_orbits.hpp"
#include "wald/interpolate.hpp"
#include "wald/quadform.hpp"

namespace wald {

void SessionConfig::validate() const {
  if (!is_odd_prime(q)) throw Error(ErrorKind::ConfigInvalid, "q must be an odd prime, got " + std::to_string(q));
  if (dmin < 0 || dmax < 0 || D < 0 || (mmax && *mmax < 0)) {
    throw Error(ErrorKind::ConfigInvalid, "bounds must be nonnegative");
  }
  if (dmin > dmax) throw Error(ErrorKind::ConfigInvalid, "dmin exceeds dmax");
  if (workers < 1) throw Error(ErrorKind::ConfigInvalid, "workers must be positive");
  if (samples < 0) throw Error(ErrorKind::ConfigInvalid, "samples must be nonnegative");
  params.validate();
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const ReportRow& r : rows) n += r.pass ? 0 : 1;
  return n;
}

json Report::summary() const {
  return {{"summary", true},
          {"campaign", campaign},
          {"cells", rows.size()},
          {"passed", rows.size() - failures()},
          {"failed", failures()},
          {"pass", all_pass()}};
}

namespace {

json row_json(const ReportRow& r) {
  return {{"campaign", r.campaign},
          {"cell", r.cell},
          {"expected", r.expected},
          {"computed", r.computed},
          {"provenance", r.provenance},
          {"pass", r.pass}};
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void Report::write_ndjson(std::ostream& os) const {
  os << header.dump() << "\n";
  for (const ReportRow& r : rows) os << row_json(r).dump() << "\n";
  os << summary().dump() << "\n";
}

void Report::write_csv(std::ostream& os) const {
  os << "campaign,cell,expected,computed,provenance,pass\n";
  for (const ReportRow& r : rows) {
    os << csv_field(r.campaign) << "," << csv_field(r.cell.dump()) << "," << csv_field(r.expected.dump()) << ","
       << csv_field(r.computed.dump()) << "," << csv_field(r.provenance) << "," << (r.pass ? "true" : "false") << "\n";
  }
}

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names = {"prop17", "stratum-dim", "counts",         "hecke-tables", "wd",
                                                 "multone", "cs",         "ke",             "quadform-orbits",
                                                 "isotropic"};
  return names;
}

namespace {

using CellFn = std::function<std::vector<ReportRow>(const json& cell)>;

/// Evaluates every cell on a bounded pool of threads, each holding its own
/// modulus scope, and concatenates the rows in cell order.
std::vector<ReportRow> run_cells(const std::vector<json>& cells, const SessionConfig& cfg, const CellFn& fn) {
  std::vector<std::vector<ReportRow>> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    ModulusScope scope(cfg.q);
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        results[i] = fn(cells[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(cfg.workers), std::max<std::size_t>(cells.size(), 1));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      throw Error(e.kind(), "cell " + cells[i].dump() + ": " + e.what());
    } catch (const std::exception& e) {
      throw std::runtime_error("cell " + cells[i].dump() + ": " + e.what());
    }
  }
  std::vector<ReportRow> rows;
  for (auto& r : results) {
    for (auto& row : r) rows.push_back(std::move(row));
  }
  return rows;
}

ReportRow make_row(const std::string& campaign, json cell, json expected, json computed, std::string provenance) {
  ReportRow r;
  r.campaign = campaign;
  r.cell = std::move(cell);
  r.pass = expected == computed;
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  r.provenance = std::move(provenance);
  return r;
}

/// Portable bounded draws from a seeded 64-bit Mersenne twister.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}
  long uniform(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational nonzero_rational() {
    long num = 0;
    while (num == 0) num = uniform(-9, 9);
    return Rational(num, uniform(1, 9));
  }

 private:
  std::mt19937_64 rng_;
};

std::string kind_str(EtaleKind k) { return std::string(to_string(k)); }

json scalar_map(const std::map<Coweight, LaurentScalar>& m) {
  json out = json::object();
  for (const auto& [w, c] : m) out[to_string(w)] = c.str();
  return out;
}

json hecke_map(const HeckeElement& h) { return scalar_map(h.terms()); }

// ---------------------------------------------------------------- prop17

Report prop17(const SessionConfig& cfg, Report report) {
  std::vector<json> cells;
  for (int d = cfg.dmin; d <= cfg.dmax; ++d) {
    const int top = cfg.mmax ? *cfg.mmax : d;
    for (int m = 0; m <= top; ++m) cells.push_back({{"d", d}, {"m", m}});
  }
  const EtaleKind kind = cfg.kind;
  report.rows = run_cells(cells, cfg, [kind](const json& cell) {
    const int d = cell["d"];
    const int m = cell["m"];
    const long expected = d < m ? 0 : (kind == EtaleKind::Split ? d - m + 1 : 1);
    return std::vector<ReportRow>{make_row(
        "prop17", cell, expected, prop17_count(kind, d, m),
        "colength-d sublattices of the orbit-m lattice lying on the closed orbit: d-m+1 points when split, one point "
        "when ramified, none when d < m")};
  });
  return report;
}

// ---------------------------------------------------------------- stratum-dim

std::vector<std::uint32_t> interpolation_nodes(int m) {
  static const std::vector<std::uint32_t> primes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  const std::size_t n = std::max<std::size_t>(3, static_cast<std::size_t>(m) + 1);
  if (n + 1 > primes.size()) throw Error(ErrorKind::ConfigInvalid, "orbit index too large for interpolation");
  return {primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(n + 1)};
}

Report stratum_dim(const SessionConfig& cfg, Report report) {
  std::vector<json> cells;
  for (int a = cfg.dmin; a <= cfg.dmax; ++a) cells.push_back({{"a", a}});
  const EtaleKind kind = cfg.kind;
  const std::optional<int> mmax = cfg.mmax;
  report.header["note"] = "counts are taken at the listed primes; the session q is not used";
  report.rows = run_cells(cells, cfg, [kind, mmax](const json& cell) {
    const int a = cell["a"];
    const int top = mmax ? *mmax : a + 1;
    std::map<std::uint32_t, std::map<int, long>> histograms;
    auto count_at = [&](std::uint32_t q, int m) {
      auto it = histograms.find(q);
      if (it == histograms.end()) {
        ModulusScope scope(q);
        it = histograms.emplace(q, orbit_stratum_histogram(kind, Coweight{a, 0})).first;
      }
      auto c = it->second.find(m);
      return c == it->second.end() ? 0L : c->second;
    };
    std::vector<ReportRow> rows;
    for (int m = 0; m <= top; ++m) {
      const std::vector<std::uint32_t> nodes = interpolation_nodes(m);
      std::vector<Rational> xs;
      std::vector<Rational> ys;
      json counts = json::object();
      bool all_nonzero = true;
      bool all_zero = true;
      for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const long c = count_at(nodes[i], m);
        counts[std::to_string(nodes[i])] = c;
        all_nonzero = all_nonzero && c != 0;
        all_zero = all_zero && c == 0;
        xs.emplace_back(static_cast<long>(nodes[i]));
        ys.emplace_back(c);
      }
      const QPolynomial p = interpolate(xs, ys);
      const std::uint32_t fresh_q = nodes.back();
      const long fresh = count_at(fresh_q, m);
      const Rational predicted = p(Rational(static_cast<long>(fresh_q)));
      const bool nonempty = m <= a;
      json expected = {{"nonempty", nonempty}, {"degree", nonempty ? m : -1}, {"fresh_matches", true}};
      json computed = {{"nonempty", all_nonzero ? json(true) : (all_zero ? json(false) : json("mixed"))},
                       {"degree", p.degree()},
                       {"fresh_matches", predicted == Rational(fresh)}};
      ReportRow row = make_row("stratum-dim", {{"a", a}, {"m", m}}, expected, computed,
                               "the orbit-m stratum of the closure of position (a,0) is nonempty iff 0 <= m <= a and "
                               "has pure dimension m, so its point count is a polynomial of degree m in q");
      row.computed["counts"] = counts;
      row.computed["polynomial"] = p.str();
      row.computed["fresh"] = {{"q", fresh_q}, {"count", fresh}, {"predicted", predicted.str()}};
      rows.push_back(std::move(row));
    }
    return rows;
  });
  return report;
}

// ---------------------------------------------------------------- counts

Report counts(const SessionConfig& cfg, Report report) {
  std::vector<json> cells;
  for (int d = cfg.dmin; d <= cfg.dmax; ++d) cells.push_back({{"d", d}});
  const long q = cfg.q;
  report.rows = run_cells(cells, cfg, [q](const json& cell) {
    const int d = cell["d"];
    long expected = 1;
    if (d > 0) {
      expected = q + 1;
      for (int i = 1; i < d; ++i) expected *= q;
    }
    const long computed = static_cast<long>(enumerate_in_position(Lattice2(), Coweight{d, 0}).size());
    return std::vector<ReportRow>{make_row("counts", cell, expected, computed,
                                           "derived oracle: O^2 has q^(d-1)(q+1) sublattices with quotient O/t^d")};
  });
  return report;
}

// ---------------------------------------------------------------- hecke-tables

Coweight random_coweight(Draws& draws, int max_length) {
  const int n = static_cast<int>(draws.uniform(0, max_length));
  const int a2 = static_cast<int>(draws.uniform(0, 1));
  return Coweight{a2 + n, a2};
}

Report hecke_tables(const SessionConfig& cfg, Report report) {
  std::vector<json> cells;
  cells.push_back({{"check", "square"}});
  for (int d = 1; d <= cfg.dmax; ++d) cells.push_back({{"check", "pieri"}, {"d", d}});
  for (int a = 0; a <= cfg.dmax; ++a) {
    for (int b = 0; b <= cfg.dmax; ++b) cells.push_back({{"check", "clebsch-gordan"}, {"a", a}, {"b", b}});
  }
  for (int a = 0; a <= cfg.dmax; ++a) {
    for (int b = a + 1; b <= cfg.dmax; ++b) cells.push_back({{"check", "commute"}, {"a", a}, {"b", b}});
  }
  const int samples = cfg.samples > 0 ? cfg.samples : 50;
  Draws draws(cfg.seed);
  for (int i = 0; i < samples; ++i) {
    const Coweight l = random_coweight(draws, 3);
    const Coweight m = random_coweight(draws, 3);
    const Coweight n = random_coweight(draws, 3);
    cells.push_back({{"check", "assoc"}, {"i", i}, {"l", to_json(l)}, {"m", to_json(m)}, {"n", to_json(n)}});
  }
  const long q = cfg.q;
  report.rows = run_cells(cells, cfg, [q](const json& cell) {
    const std::string check = cell["check"];
    auto T = [](int a1, int a2) { return HeckeElement::basis(Coweight{a1, a2}); };
    if (check == "square") {
      const HeckeElement expected = T(2, 0) + LaurentScalar(Rational(q + 1)) * T(1, 1);
      return std::vector<ReportRow>{make_row("hecke-tables", cell, hecke_map(expected),
                                             hecke_map(convolve(T(1, 0), T(1, 0))),
                                             "derived oracle: T(1,0)^2 = T(2,0) + (q+1) T(1,1) by lattice counting")};
    }
    if (check == "pieri") {
      const int d = cell["d"];
      const HeckeElement lhs = convolve(satake_basis(Coweight{1, 0}), satake_basis(Coweight{d, 0}));
      const HeckeElement rhs = satake_basis(Coweight{d + 1, 0}) + satake_basis(Coweight{d, 1});
      ReportRow row = make_row("hecke-tables", cell, hecke_map(rhs), hecke_map(lhs),
                               "Pieri rule: A(1,0) * A(d,0) = A(d+1,0) + A(d,1), the tensor product V_1 (x) V_d");
      return std::vector<ReportRow>{row};
    }
    if (check == "clebsch-gordan") {
      const int a = cell["a"];
      const int b = cell["b"];
      std::map<Coweight, LaurentScalar> expected;
      for (int k = 0; k <= std::min(a, b); ++k) expected[Coweight{a + b - k, k}] = LaurentScalar(1);
      const auto computed =
          satake_coordinates(convolve(satake_basis(Coweight{a, 0}), satake_basis(Coweight{b, 0})));
      return std::vector<ReportRow>{make_row(
          "hecke-tables", cell, scalar_map(expected), scalar_map(computed),
          "A-basis structure constants equal GL2 tensor product multiplicities: V_a (x) V_b = sum_k V_(a+b-k,k)")};
    }
    if (check == "commute") {
      const int a = cell["a"];
      const int b = cell["b"];
      return std::vector<ReportRow>{make_row("hecke-tables", cell, hecke_map(convolve(T(a, 0), T(b, 0))),
                                             hecke_map(convolve(T(b, 0), T(a, 0))),
                                             "the spherical Hecke algebra is commutative")};
    }
    const Coweight l{cell["l"][0], cell["l"][1]};
    const Coweight m{cell["m"][0], cell["m"][1]};
    const Coweight n{cell["n"][0], cell["n"][1]};
    const HeckeElement tl = HeckeElement::basis(l);
    const HeckeElement tm = HeckeElement::basis(m);
    const HeckeElement tn = HeckeElement::basis(n);
    const HeckeElement left = convolve(convolve(tl, tm), tn);
    const HeckeElement right = convolve(tl, convolve(tm, tn));
    const HeckeElement swapped = convolve(convolve(tm, tl), tn);
    ReportRow row = make_row("hecke-tables", cell, hecke_map(left), hecke_map(right),
                             "convolution is associative and commutative");
    row.pass = row.pass && swapped == left;
    row.computed = {{"(l*m)*n", hecke_map(left)}, {"l*(m*n)", hecke_map(right)}, {"(m*l)*n", hecke_map(swapped)}};
    row.expected = {{"all_equal", true}};
    return std::vector<ReportRow>{row};
  });
  return report;
}

// ---------------------------------------------------------------- wd

Report wd(const SessionConfig& cfg, Report report) {
  std::vector<json> cells;
  for (int d = cfg.dmin; d <= cfg.dmax; ++d) cells.push_back({{"d", d}});
  const EtaleKind kind = cfg.kind;
  const ActionConvention convention = cfg.convention;
  report.rows = run_cells(cells, cfg, [kind, convention](const json& cell) {
    const int d = cell["d"];
    const WaldFunction w = convention == ActionConvention::Sublattice
                               ? w_d(kind, d)
                               : hecke_act(kind, satake_basis(Coweight{d, 0}), w0(), convention);
    std::vector<ReportRow> rows;
    std::vector<int> expected_support;
    for (int m = 0; m <= d; ++m) expected_support.push_back(m);
    ReportRow support = make_row("wd", {{"d", d}, {"check", "support"}}, expected_support, w.support(),
                                 "the W_d stalk at orbit m vanishes unless m <= d, and is nonzero for 0 <= m <= d");
    json values = json::object();
    for (const auto& [m, v] : w.values()) values[std::to_string(m)] = v.str();
    support.computed = {{"support", w.support()}, {"values", values}, {"top", w.at(d).str()}};
    support.expected = {{"support", expected_support}, {"values", values}, {"top", w.at(d).str()}};
    rows.push_back(std::move(support));
    for (int m = 0; m <= d; ++m) {
      const long expected = kind == EtaleKind::Split ? d - m + 1 : 1;
      const long computed = static_cast<long>(monomial_count(w.at(m), character_vars(kind)));
      rows.push_back(make_row("wd", {{"d", d}, {"m", m}, {"check", "monomials"}}, expected, computed,
                              "the fiber of W_d over orbit m is one-dimensional (ramified) or (d-m+1)-dimensional "
                              "(split)"));
    }
    const WaldFunction central = hecke_act(kind, HeckeElement::basis(Coweight{1, 1}), w, convention);
    rows.push_back(make_row("wd", {{"d", d}, {"check", "central"}}, (central_character(kind) * w).str(), central.str(),
                            "T(1,1) acts on W_d through the central character chi_c(t)"));
    return rows;
  });
  return report;
}

// ---------------------------------------------------------------- multone

Report multone(const SessionConfig& cfg, Report report) {
  std::vector<json> cells;
  for (int a = 0; a <= cfg.D; ++a) cells.push_back({{"a", a}});
  cells.push_back({{"check", "triangular"}});
  const EtaleKind kind = cfg.kind;
  const int D = cfg.D;
  report.rows = run_cells(cells, cfg, [kind, D](const json& cell) {
    const std::string provenance =
        "the Waldspurger module is free of rank one over the chi_c-twisted Hecke algebra: T(a,0) applied to the "
        "closed-orbit delta is supported on m <= a with an invertible value at m = a";
    if (cell.contains("check")) {
      const ScalarMatrix M = multone_matrix(kind, D);
      bool unit_diagonal = true;
      for (int i = 0; i <= D; ++i) unit_diagonal = unit_diagonal && M(i, i).is_monomial();
      ReportRow row = make_row("multone", cell, json{{"upper_triangular", true}, {"unit_monomial_diagonal", true}},
                               json{{"upper_triangular", is_upper_triangular(M)}, {"unit_monomial_diagonal", unit_diagonal}},
                               provenance);
      row.computed["matrix"] = to_json(M);
      return std::vector<ReportRow>{row};
    }
    const int a = cell["a"];
    const WaldFunction f = hecke_act(kind, HeckeElement::basis(Coweight{a, 0}), w0());
    const int top = f.is_zero() ? -1 : f.values().rbegin()->first;
    ReportRow row = make_row("multone", cell, json{{"max_support", a}, {"unit_monomial_top", true}},
                             json{{"max_support", top}, {"unit_monomial_top", f.at(a).is_monomial()}}, provenance);
    row.computed["top"] = f.at(a).str();
    return std::vector<ReportRow>{row};
  });
  return report;
}

// ---------------------------------------------------------------- cs

Report cs(const SessionConfig& cfg, Report report) {
  std::vector<json> cells;
  for (int d = 0; d <= cfg.D; ++d) cells.push_back({{"d", d}});
  cells.push_back({{"check", "closed-orbit-restriction"}});
  cells.push_back({{"check", "inverse"}});
  const EtaleKind kind = cfg.kind;
  const int D = cfg.D;
  report.rows = run_cells(cells, cfg, [kind, D](const json& cell) {
    std::vector<ReportRow> rows;
    if (cell.contains("d")) {
      const int d = cell["d"];
      const WaldFunction w = w_d(kind, d);
      for (int m = 0; m <= D; ++m) {
        const long expected = m > d ? 0 : (kind == EtaleKind::Split ? d - m + 1 : 1);
        ReportRow row = make_row("cs", {{"m", m}, {"d", d}}, expected,
                                 static_cast<long>(monomial_count(w.at(m), character_vars(kind))),
                                 "change of basis from {W_d} to orbit deltas is triangular with (d-m+1)-term (split) or "
                                 "single-term (ramified) entries");
        rows.push_back(std::move(row));
      }
      return rows;
    }
    const ScalarMatrix M = cs_matrix(kind, std::max(D, 1));
    if (cell["check"] == "closed-orbit-restriction") {
      ReportRow row = make_row("cs", cell, true, !M(0, 1).is_zero(),
                               "the restriction of W_1 to the closed orbit is nonzero, so the category is not "
                               "semisimple");
      row.computed = {{"nonzero", !M(0, 1).is_zero()}, {"entry", M(0, 1).str()}};
      row.expected = {{"nonzero", true}, {"entry", M(0, 1).str()}};
      return std::vector<ReportRow>{row};
    }
    const Eigen::Index n = M.rows();
    ScalarMatrix inv(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      DenseVector<LaurentScalar> e = DenseVector<LaurentScalar>::Constant(n, LaurentScalar());
      e(j) = LaurentScalar(1);
      inv.col(j) = solve_upper(M, e);
    }
    const ScalarMatrix product = M * inv;
    bool identity = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) identity = identity && product(i, j) == LaurentScalar(i == j ? 1 : 0);
    }
    ReportRow row = make_row("cs", cell, json{{"inverse_exact", true}}, json{{"inverse_exact", identity}},
                             "derived oracle: the orbit-delta to W_d change of basis, inverted exactly");
    row.computed["inverse"] = to_json(inv);
    rows.push_back(std::move(row));
    return rows;
  });
  return report;
}

// ---------------------------------------------------------------- ke

Report ke(const SessionConfig& cfg, Report report) {
  struct Draw {
    CharacterParams params;
    Rational e1;
  };
  std::vector<Draw> draws;
  if (!cfg.params.symbolic) {
    CharacterParams p = cfg.params;
    p.kind = cfg.kind;
    draws.push_back({p, cfg.e1});
  } else {
    const int samples = cfg.samples > 0 ? cfg.samples : 20;
    Draws rng(cfg.seed);
    for (int i = 0; i < samples; ++i) {
      CharacterParams p;
      p.kind = cfg.kind;
      p.symbolic = false;
      p.alpha = rng.nonzero_rational();
      p.beta = rng.nonzero_rational();
      p.gamma = rng.nonzero_rational();
      draws.push_back({p, rng.nonzero_rational()});
    }
  }
  std::vector<json> cells;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const Draw& d = draws[i];
    json cell = {{"draw", i}, {"e1", d.e1.str()}};
    if (d.params.kind == EtaleKind::Split) {
      cell["alpha"] = d.params.alpha.str();
      cell["beta"] = d.params.beta.str();
    } else {
      cell["gamma"] = d.params.gamma.str();
    }
    cells.push_back(cell);
  }
  const int D = cfg.D;
  report.rows = run_cells(cells, cfg, [&draws, D](const json& cell) {
    const Draw& d = draws[cell["draw"].get<std::size_t>()];
    const KeReport r = ke_check(D, d.e1, d.params);
    json lc = json::array();
    json rc = json::array();
    for (const Rational& x : r.lhs_coords) lc.push_back(x.str());
    for (const Rational& x : r.rhs_coords) rc.push_back(x.str());
    ReportRow row;
    row.campaign = "ke";
    row.cell = cell;
    row.expected = {{"window_at_least", r.required_window}, {"central", true}};
    row.computed = {{"window", r.window},
                    {"central", r.central_ok},
                    {"orbit_window", r.orbit_window},
                    {"e2", r.e2.str()},
                    {"lhs_coords", lc},
                    {"rhs_coords", rc}};
    row.provenance =
        "the truncated K_E = sum_d s_(0,-d)(e1,e2) W_d is an A(1,0)-eigenvector with eigenvalue e1+e2 on the "
        "truncation-safe window and an A(1,1)-eigenvector with eigenvalue e1 e2";
    row.pass = r.pass;
    return std::vector<ReportRow>{row};
  });
  return report;
}

// ---------------------------------------------------------------- quadform-orbits

LaurentPoly random_poly(Draws& draws, int precision, bool unit) {
  std::vector<long long> c(static_cast<std::size_t>(precision));
  const long q = static_cast<long>(current_q());
  for (int i = 0; i < precision; ++i) c[static_cast<std::size_t>(i)] = draws.uniform(0, q - 1);
  if (unit) c[0] = draws.uniform(1, q - 1);
  return LaurentPoly::from_coeffs(0, c);
}

Mat2 random_gl2(Draws& draws, int precision) {
  while (true) {
    Mat2 A;
    A << random_poly(draws, precision, false), random_poly(draws, precision, false),
        random_poly(draws, precision, false), random_poly(draws, precision, false);
    if (det2(A).valuation() == 0) return A;
  }
}

SymMatrixO transformed(const SymMatrixO& B, const Mat2& A, const LaurentPoly& eps) {
  const Mat2 M = A * B.matrix() * A.transpose();
  return SymMatrixO::make(M(0, 0) * eps, M(0, 1) * eps, M(1, 1) * eps);
}

json form_json(const SymMatrixO& B) { return json::array({B.x.str(), B.y.str(), B.z.str()}); }

/// Primitive (x, y) mod t^(a+1) with t^a x^2 + t^b w y^2 = 0 mod t^(a+1).
bool brute_isotropic(int a, int b, const FqElem& w) {
  const int n = a + 1;
  const std::uint32_t q = current_q();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  auto poly = [&](std::size_t code) {
    std::vector<long long> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<long long>(code % q);
      code /= q;
    }
    return LaurentPoly::from_coeffs(0, c);
  };
  const LaurentPoly ta = LaurentPoly::t_pow(a);
  const LaurentPoly tbw = LaurentPoly::monomial(b, w);
  for (std::size_t xi = 0; xi < total; ++xi) {
    const LaurentPoly x = poly(xi);
    for (std::size_t yi = 0; yi < total; ++yi) {
      if (xi % q == 0 && yi % q == 0) continue;
      const LaurentPoly y = poly(yi);
      if ((ta * x * x + tbw * y * y).truncated(n).is_zero()) return true;
    }
  }
  return false;
}

int orbit_precision(std::uint32_t q) {
  int n = 1;
  double states = static_cast<double>(q) * q * q;
  while (n < 4 && states * q * q * q <= 2e6) {
    ++n;
    states *= static_cast<double>(q) * q * q;
  }
  return n;
}

Report quadform_orbits(const SessionConfig& cfg, Report report) {
  constexpr int kPrecision = 6;
  const int samples = cfg.samples > 0 ? cfg.samples : 200;
  std::vector<json> cells;
  for (int i = 0; i < samples; ++i) cells.push_back({{"check", "invariance"}, {"i", i}});
  for (int s = 0; s <= 3; ++s) {
    for (int b = 0; 2 * b <= s; ++b) {
      for (const char* delta : {"Square", "NonSquare"}) {
        cells.push_back({{"check", "parity"}, {"a", s - b}, {"b", b}, {"delta", delta}});
      }
    }
  }
  cells.push_back({{"check", "completeness"}});
  const std::uint64_t seed = cfg.seed;
  const int witness_samples = samples;
  report.header["precision"] = kPrecision;
  report.header["orbit_search_precision"] = orbit_precision(cfg.q);
  report.rows = run_cells(cells, cfg, [seed, witness_samples](const json& cell) {
    const std::string check = cell["check"];
    FqElem nonsquare;
    for (std::uint32_t g = 1; g < current_q(); ++g) {
      if (!FqElem::from_int(g).is_nonzero_square()) {
        nonsquare = FqElem::from_int(g);
        break;
      }
    }
    if (check == "invariance") {
      const int i = cell["i"];
      Draws draws(seed + 7919 * static_cast<std::uint64_t>(i + 1));
      SymMatrixO B;
      std::optional<PhiInvariant> known;
      if (i % 2 == 0) {
        // A random root pushed through a random transform: the invariant is known.
        const int s = static_cast<int>(draws.uniform(0, 2));
        const int b = static_cast<int>(draws.uniform(0, s / 2));
        const bool square = draws.uniform(0, 1) == 0;
        const FqElem w = square ? FqElem::from_int(1) : nonsquare;
        const SymMatrixO root = SymMatrixO::make(LaurentPoly::t_pow(s - b), LaurentPoly(0), LaurentPoly::monomial(b, w));
        known = PhiInvariant{s - b, b, square ? SquareClass::Square : SquareClass::NonSquare};
        B = transformed(root, random_gl2(draws, kPrecision), random_poly(draws, kPrecision, true));
      } else {
        while (true) {
          const LaurentPoly x = random_poly(draws, kPrecision, false);
          const LaurentPoly y = random_poly(draws, kPrecision, false);
          const LaurentPoly z = random_poly(draws, kPrecision, false);
          const LaurentPoly det = x * z - y * y;
          if (!det.is_zero() && det.valuation() <= 2) {
            B = SymMatrixO::make(x, y, z);
            break;
          }
        }
      }
      const Mat2 A = random_gl2(draws, kPrecision);
      const LaurentPoly eps = random_poly(draws, kPrecision, true);
      const SymMatrixO B2 = transformed(B, A, eps);
      const PhiInvariant before = diagonalize(B, kPrecision).inv;
      const PhiInvariant after = diagonalize(B2, kPrecision).inv;
      ReportRow row = make_row("quadform-orbits", cell, to_json(known.value_or(before)), to_json(after),
                               "the invariant (a, b, delta) is constant on orbits of B -> A B A^t eps");
      row.computed = {{"before", to_json(before)}, {"after", to_json(after)}, {"form", form_json(B)}};
      row.expected = {{"before", to_json(known.value_or(before))}, {"after", to_json(known.value_or(before))},
                      {"form", form_json(B)}};
      row.pass = row.computed == row.expected;
      return std::vector<ReportRow>{row};
    }
    if (check == "parity") {
      const int a = cell["a"];
      const int b = cell["b"];
      const bool square = cell["delta"] == "Square";
      const PhiInvariant inv{a, b, square ? SquareClass::Square : SquareClass::NonSquare};
      const CoverType cover = covering_type(inv);
      const bool isotropic = brute_isotropic(a, b, square ? FqElem::from_int(1) : nonsquare);
      ReportRow row;
      row.campaign = "quadform-orbits";
      row.cell = cell;
      row.expected = {{"ramified_iff_a_minus_b_odd", true}, {"split_iff_isotropic", true}};
      row.computed = {{"ramified_iff_a_minus_b_odd", ((a - b) % 2 != 0) == (cover == CoverType::RamifiedCover)},
                      {"split_iff_isotropic", isotropic == (cover == CoverType::SplitCover)},
                      {"cover", std::string(to_string(cover))},
                      {"isotropic", isotropic}};
      row.provenance = "the double covering is ramified (the form anisotropic) if a - b is odd";
      row.pass = row.computed["ramified_iff_a_minus_b_odd"] == true && row.computed["split_iff_isotropic"] == true;
      return std::vector<ReportRow>{row};
    }
    // Exhaustive search modulo t^N.
    const int N = orbit_precision(current_q());
    const SimilitudeOrbits orbits(N);
    std::size_t nondegenerate = 0;
    std::size_t reached = 0;
    std::size_t agree = 0;
    std::vector<std::size_t> reached_states;
    for (std::size_t s = 0; s < orbits.state_count(); ++s) {
      const FormEntries e = orbits.decode(s);
      const LaurentPoly det = (e.x * e.z - e.y * e.y).truncated(N);
      if (det.is_zero()) continue;
      ++nondegenerate;
      const SymMatrixO form = SymMatrixO::make(e.x, e.y, e.z);
      const auto root = orbits.orbit_of(form);
      if (!root) continue;
      ++reached;
      reached_states.push_back(s);
      if (orbits.roots()[*root].inv == diagonalize(form, N).inv) ++agree;
    }
    Draws draws(seed);
    std::size_t witnesses_ok = 0;
    const std::size_t n_witness = std::min<std::size_t>(static_cast<std::size_t>(witness_samples), reached_states.size());
    for (std::size_t i = 0; i < n_witness; ++i) {
      const std::size_t s = reached_states[static_cast<std::size_t>(
          draws.uniform(0, static_cast<long>(reached_states.size()) - 1))];
      const FormEntries e = orbits.decode(s);
      const SymMatrixO form = SymMatrixO::make(e.x, e.y, e.z);
      const auto w = orbits.witness(form);
      const Mat2 M = w.A * orbits.roots()[w.root].form.matrix() * w.A.transpose();
      const bool ok = det2(w.A).valuation() == 0 && w.epsilon.valuation() == 0 &&
                      (M(0, 0) * w.epsilon - e.x).truncated(N).is_zero() &&
                      (M(0, 1) * w.epsilon - e.y).truncated(N).is_zero() &&
                      (M(1, 1) * w.epsilon - e.z).truncated(N).is_zero();
      witnesses_ok += ok ? 1 : 0;
    }
    ReportRow row;
    row.campaign = "quadform-orbits";
    row.cell = {{"check", "completeness"}, {"precision", N}, {"max_det_valuation", N - 1}};
    row.expected = {{"reached", nondegenerate}, {"invariants_agree", nondegenerate}, {"roots_disjoint", true},
                    {"witnesses_verified", n_witness}};
    row.computed = {{"reached", reached}, {"invariants_agree", agree}, {"roots_disjoint", orbits.roots_disjoint()},
                    {"witnesses_verified", witnesses_ok}};
    row.provenance =
        "every symmetric form with val det < N lies in the orbit of exactly one normal form diag(t^a, t^b w) with "
        "w in {1, nonsquare}";
    row.pass = row.expected == row.computed;
    row.computed["states"] = orbits.state_count();
    row.computed["roots"] = orbits.roots().size();
    return std::vector<ReportRow>{row};
  });
  return report;
}

// ---------------------------------------------------------------- isotropic

std::string form_type(const FqSymForm& f) {
  const FqElem det = f.x * f.z - f.y * f.y;
  if (f.x.is_zero() && f.y.is_zero() && f.z.is_zero()) return "rank0";
  if (det.is_zero()) {
    const FqElem lead = f.x.is_zero() ? f.z : f.x;
    return lead.is_nonzero_square() ? "rank1-square" : "rank1-nonsquare";
  }
  return (-det).is_nonzero_square() ? "rank2-split" : "rank2-anisotropic";
}

Report isotropic(const SessionConfig& cfg, Report report) {
  const std::vector<std::string> types = {"rank0", "rank1-square", "rank1-nonsquare", "rank2-split",
                                          "rank2-anisotropic"};
  std::vector<json> cells;
  for (const std::string& t : types) cells.push_back({{"type", t}});
  report.rows = run_cells(cells, cfg, [](const json& cell) {
    const std::string type = cell["type"];
    const std::uint32_t q = current_q();
    const long expected_lines = type == "rank0" ? static_cast<long>(q) + 1
                                : type == "rank2-split"       ? 2
                                : type == "rank2-anisotropic" ? 0
                                                              : 1;
    long forms = 0;
    long brute_agree = 0;
    long library_agree = 0;
    for (std::uint32_t x = 0; x < q; ++x) {
      for (std::uint32_t y = 0; y < q; ++y) {
        for (std::uint32_t z = 0; z < q; ++z) {
          const FqSymForm f{FqElem::from_int(x), FqElem::from_int(y), FqElem::from_int(z)};
          if (form_type(f) != type) continue;
          ++forms;
          // Lines [1 : u] and [0 : 1].
          long lines = f.z.is_zero() ? 1 : 0;
          for (std::uint32_t u = 0; u < q; ++u) {
            const FqElem v = FqElem::from_int(u);
            if ((f.x + FqElem::from_int(2) * f.y * v + f.z * v * v).is_zero()) ++lines;
          }
          brute_agree += lines == expected_lines ? 1 : 0;
          library_agree += isotropic_line_count(f) == expected_lines ? 1 : 0;
        }
      }
    }
    ReportRow row;
    row.campaign = "isotropic";
    row.cell = cell;
    row.expected = {{"lines", expected_lines}, {"brute_force_agree", forms}, {"library_agree", forms}};
    row.computed = {{"lines", expected_lines}, {"brute_force_agree", brute_agree}, {"library_agree", library_agree}};
    row.provenance =
        "a quadratic form on F_q^2 has q+1 isotropic lines if zero, one if of rank one (the kernel), and two or none "
        "if nondegenerate";
    row.pass = row.expected == row.computed && forms > 0;
    row.computed["forms"] = forms;
    return std::vector<ReportRow>{row};
  });
  return report;
}

}  // namespace

Report run_campaign(const std::string& name, const SessionConfig& cfg) {
  cfg.validate();
  Report report;
  report.campaign = name;
  report.header = {{"campaign", name},
                   {"q", cfg.q},
                   {"kind", kind_str(cfg.kind)},
                   {"dmin", cfg.dmin},
                   {"dmax", cfg.dmax},
                   {"mmax", cfg.mmax ? json(*cfg.mmax) : json(nullptr)},
                   {"D", cfg.D},
                   {"seed", cfg.seed},
                   {"samples", cfg.samples},
                   {"convention", std::string(to_string(cfg.convention))}};
  if (cfg.convention != ActionConvention::Sublattice && (name == "multone" || name == "cs" || name == "ke")) {
    throw Error(ErrorKind::ConfigInvalid, "only the sublattice convention is wired into campaigns; use hecke_act directly");
  }
  if (name == "prop17") return prop17(cfg, report);
  if (name == "stratum-dim") return stratum_dim(cfg, report);
  if (name == "counts") return counts(cfg, report);
  if (name == "hecke-tables") return hecke_tables(cfg, report);
  if (name == "wd") return wd(cfg, report);
  if (name == "multone") return multone(cfg, report);
  if (name == "cs") return cs(cfg, report);
  if (name == "ke") return ke(cfg, report);
  if (name == "quadform-orbits") return quadform_orbits(cfg, report);
  if (name == "isotropic") return isotropic(cfg, report);
  throw Error(ErrorKind::ConfigInvalid, "unknown campaign '" + name + "'");
}

}  // namespace wald
