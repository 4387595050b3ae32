#include "wald/waldspurger.hpp"

#include <mutex>
#include <sstream>
#include <tuple>

#include "wald/context.hpp"
#include "wald/error.hpp"

namespace wald {

WaldFunction WaldFunction::delta(int m, const LaurentScalar& value) {
  WaldFunction f;
  f.set(m, value);
  return f;
}

LaurentScalar WaldFunction::at(int m) const {
  auto it = values_.find(m);
  return it == values_.end() ? LaurentScalar() : it->second;
}

void WaldFunction::set(int m, const LaurentScalar& value) {
  if (m < 0) throw Error(ErrorKind::ConfigInvalid, "orbit index must be nonnegative");
  if (value.is_zero()) {
    values_.erase(m);
  } else {
    values_[m] = value;
  }
}

std::vector<int> WaldFunction::support() const {
  std::vector<int> out;
  for (const auto& [m, v] : values_) out.push_back(m);
  return out;
}

WaldFunction& WaldFunction::operator+=(const WaldFunction& o) {
  for (const auto& [m, v] : o.values_) set(m, at(m) + v);
  return *this;
}

WaldFunction& WaldFunction::operator-=(const WaldFunction& o) {
  for (const auto& [m, v] : o.values_) set(m, at(m) - v);
  return *this;
}

WaldFunction operator*(const LaurentScalar& c, const WaldFunction& f) {
  WaldFunction out;
  for (const auto& [m, v] : f.values_) out.set(m, c * v);
  return out;
}

std::string WaldFunction::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [m, v] : values_) {
    if (!first) os << ", ";
    first = false;
    os << m << ": " << v;
  }
  os << "}";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const WaldFunction& f) { return os << f.str(); }

std::string_view to_string(ActionConvention c) {
  return c == ActionConvention::Sublattice ? "sublattice" : "superlattice";
}

ActionConvention parse_convention(const std::string& text) {
  if (text == "sublattice") return ActionConvention::Sublattice;
  if (text == "superlattice") return ActionConvention::Superlattice;
  throw Error(ErrorKind::ConfigInvalid, "unknown action convention '" + text + "'");
}

WaldFunction w0() { return WaldFunction::delta(0); }

namespace {

using RowKey = std::tuple<std::uint32_t, int, int, int, int, int>;

std::mutex& row_mutex() {
  static std::mutex m;
  return m;
}

std::map<RowKey, std::map<int, LaurentScalar>>& row_cache() {
  static std::map<RowKey, std::map<int, LaurentScalar>> cache;
  return cache;
}

}  // namespace

const std::map<int, LaurentScalar>& action_row(EtaleKind kind, const Coweight& lambda, int m,
                                                ActionConvention convention) {
  const RowKey key{current_q(), static_cast<int>(kind), lambda.a1, lambda.a2, m, static_cast<int>(convention)};
  {
    std::lock_guard<std::mutex> lock(row_mutex());
    auto it = row_cache().find(key);
    if (it != row_cache().end()) return it->second;
  }
  const Coweight position =
      convention == ActionConvention::Sublattice ? lambda : Coweight{-lambda.a2, -lambda.a1};
  std::map<int, LaurentScalar> row;
  for (const Lattice2& L : enumerate_in_position(orbit_representative(kind, m), position)) {
    const Normalized n = normalize(kind, L);
    row[n.m] += n.chi;
  }
  std::erase_if(row, [](const auto& entry) { return entry.second.is_zero(); });
  std::lock_guard<std::mutex> lock(row_mutex());
  return row_cache().emplace(key, std::move(row)).first->second;
}

WaldFunction hecke_act(EtaleKind kind, const HeckeElement& h, const WaldFunction& f, ActionConvention convention) {
  WaldFunction out;
  if (h.is_zero() || f.is_zero()) return out;
  const int lo = f.values().begin()->first;
  const int hi = f.values().rbegin()->first;
  for (const auto& [lambda, c] : h.terms()) {
    const int n = lambda.length();
    WaldFunction term;
    for (int m = std::max(0, lo - n); m <= hi + n; ++m) {
      LaurentScalar value;
      for (const auto& [source, weight] : action_row(kind, lambda, m, convention)) {
        auto it = f.values().find(source);
        if (it != f.values().end()) value += weight * it->second;
      }
      term.set(m, value);
    }
    out += c * term;
  }
  return out;
}

namespace {

std::mutex& wd_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::tuple<std::uint32_t, int, int>, WaldFunction>& wd_cache() {
  static std::map<std::tuple<std::uint32_t, int, int>, WaldFunction> cache;
  return cache;
}

}  // namespace

WaldFunction w_d(EtaleKind kind, int d) {
  if (d < 0) throw Error(ErrorKind::ConfigInvalid, "w_d needs d >= 0");
  const std::tuple<std::uint32_t, int, int> key{current_q(), static_cast<int>(kind), d};
  {
    std::lock_guard<std::mutex> lock(wd_mutex());
    auto it = wd_cache().find(key);
    if (it != wd_cache().end()) return it->second;
  }
  WaldFunction f = hecke_act(kind, satake_basis(Coweight{d, 0}), w0());
  std::lock_guard<std::mutex> lock(wd_mutex());
  return wd_cache().emplace(key, std::move(f)).first->second;
}

long prop17_count(EtaleKind kind, int d, int m) {
  long count = 0;
  for (const Lattice2& L : closure_members(orbit_representative(kind, m), Coweight{d, 0})) {
    if (normalize(kind, L).m == 0) ++count;
  }
  return count;
}

long orbit_stratum_count(EtaleKind kind, const Coweight& lambda, int m) {
  long count = 0;
  for (const Lattice2& L : closure_members(Lattice2(), lambda)) {
    if (normalize(kind, L).m == m) ++count;
  }
  return count;
}

std::map<int, long> orbit_stratum_histogram(EtaleKind kind, const Coweight& lambda) {
  std::map<int, long> counts;
  for (const Lattice2& L : closure_members(Lattice2(), lambda)) ++counts[normalize(kind, L).m];
  return counts;
}

namespace {

ScalarMatrix columns_to_matrix(const std::vector<WaldFunction>& columns, int D) {
  ScalarMatrix M = ScalarMatrix::Zero(D + 1, D + 1);
  for (int j = 0; j <= D; ++j) {
    for (const auto& [m, v] : columns[static_cast<std::size_t>(j)].values()) {
      if (m <= D) M(m, j) = v;
    }
  }
  return M;
}

}  // namespace

ScalarMatrix multone_matrix(EtaleKind kind, int D) {
  if (D < 0) throw Error(ErrorKind::ConfigInvalid, "multone_matrix needs D >= 0");
  std::vector<WaldFunction> columns;
  for (int a = 0; a <= D; ++a) columns.push_back(hecke_act(kind, HeckeElement::basis(Coweight{a, 0}), w0()));
  return columns_to_matrix(columns, D);
}

ScalarMatrix cs_matrix(EtaleKind kind, int D) {
  if (D < 0) throw Error(ErrorKind::ConfigInvalid, "cs_matrix needs D >= 0");
  std::vector<WaldFunction> columns;
  for (int d = 0; d <= D; ++d) columns.push_back(w_d(kind, d));
  return columns_to_matrix(columns, D);
}

void CharacterParams::validate() const {
  if (symbolic) return;
  if (kind == EtaleKind::Split && (alpha.is_zero() || beta.is_zero())) {
    throw Error(ErrorKind::ConfigInvalid, "alpha and beta must be nonzero");
  }
  if (kind == EtaleKind::Ramified && gamma.is_zero()) throw Error(ErrorKind::ConfigInvalid, "gamma must be nonzero");
}

Assignment CharacterParams::assignment() const {
  Assignment a;
  if (kind == EtaleKind::Split) {
    a.alpha = alpha;
    a.beta = beta;
  } else {
    a.gamma = gamma;
  }
  return a;
}

Rational CharacterParams::chi_c() const { return kind == EtaleKind::Split ? alpha * beta : gamma * gamma; }

namespace {

using RationalVector = DenseVector<Rational>;

RationalVector specialize_orbits(const WaldFunction& f, int size, const Assignment& assignment) {
  RationalVector v = RationalVector::Constant(size, Rational(0));
  for (const auto& [m, value] : f.values()) {
    if (m >= size) throw Error(ErrorKind::ConfigInvalid, "orbit index beyond the check window");
    v(m) = specialize(value, assignment);
  }
  return v;
}

}  // namespace

KeReport ke_check(int D, const Rational& e1, const CharacterParams& params) {
  if (D < 2) throw Error(ErrorKind::TruncationTooSmall, "ke_check needs D >= 2, got " + std::to_string(D));
  if (params.symbolic) throw Error(ErrorKind::ConfigInvalid, "ke_check needs numeric character parameters");
  params.validate();
  if (e1.is_zero()) throw Error(ErrorKind::ZeroEigenvalue, "e1 must be nonzero");

  const EtaleKind kind = params.kind;
  const Assignment assignment = params.assignment();
  KeReport report;
  report.D = D;
  report.e1 = e1;
  report.e2 = params.chi_c() / e1;
  report.required_window = D - 1;
  const Rational& e2 = report.e2;

  const int size = D + 2;
  const HeckeElement a10 = satake_basis(Coweight{1, 0});
  const HeckeElement a11 = satake_basis(Coweight{1, 1});
  RationalVector K = RationalVector::Constant(size, Rational(0));
  RationalVector lhs = K;
  RationalVector central = K;
  for (int d = 0; d <= D; ++d) {
    const Rational s = schur_gl2(Coweight{0, -d}, e1, e2);
    const WaldFunction w = w_d(kind, d);
    K += s * specialize_orbits(w, size, assignment);
    lhs += s * specialize_orbits(hecke_act(kind, a10, w), size, assignment);
    central += s * specialize_orbits(hecke_act(kind, a11, w), size, assignment);
  }
  const RationalVector rhs = (e1 + e2) * K;

  RationalMatrix basis(size, size);
  const ScalarMatrix cs = cs_matrix(kind, size - 1);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) basis(i, j) = specialize(cs(i, j), assignment);
  }
  const RationalVector lc = solve_upper(basis, lhs);
  const RationalVector rc = solve_upper(basis, rhs);
  for (int n = 0; n < size; ++n) {
    report.lhs_coords.push_back(lc(n));
    report.rhs_coords.push_back(rc(n));
  }
  while (report.window + 1 < size && lc(report.window + 1) == rc(report.window + 1)) ++report.window;
  while (report.orbit_window + 1 < size && lhs(report.orbit_window + 1) == rhs(report.orbit_window + 1)) {
    ++report.orbit_window;
  }
  report.hecke_ok = report.window >= report.required_window;
  report.central_ok = central == (e1 * e2) * K;
  report.pass = report.hecke_ok && report.central_ok;
  return report;
}

}  // namespace wald
