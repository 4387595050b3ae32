#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wald/hecke.hpp"
#include "wald/matrix.hpp"
#include "wald/torus.hpp"

namespace wald {

/// Finitely supported chi-equivariant function on torus orbits of the affine
/// Grassmannian: f(orbit_representative(m)) = values[m], f(u L) = chi(u) f(L).
class WaldFunction {
 public:
  using Values = std::map<int, LaurentScalar>;

  WaldFunction() = default;

  static WaldFunction delta(int m, const LaurentScalar& value = LaurentScalar(1));

  const Values& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }
  LaurentScalar at(int m) const;
  void set(int m, const LaurentScalar& value);
  /// Sorted orbit indices with a nonzero value.
  std::vector<int> support() const;

  WaldFunction& operator+=(const WaldFunction& o);
  WaldFunction& operator-=(const WaldFunction& o);

  friend WaldFunction operator+(WaldFunction x, const WaldFunction& y) { return x += y; }
  friend WaldFunction operator-(WaldFunction x, const WaldFunction& y) { return x -= y; }
  friend WaldFunction operator*(const LaurentScalar& c, const WaldFunction& f);
  friend bool operator==(const WaldFunction& x, const WaldFunction& y) { return x.values_ == y.values_; }
  friend bool operator!=(const WaldFunction& x, const WaldFunction& y) { return !(x == y); }

  std::string str() const;

 private:
  Values values_;
};

std::ostream& operator<<(std::ostream& os, const WaldFunction& f);

/// Which lattices T_lambda sums over.  Sublattice: L' with
/// relative_position(L, L') = lambda.  Superlattice: position -w0(lambda).
enum class ActionConvention { Sublattice, Superlattice };

std::string_view to_string(ActionConvention c);
ActionConvention parse_convention(const std::string& text);

/// Delta of the closed orbit m = 0.
WaldFunction w0();

/// Row m of T_lambda: the map m' -> sum of normalize(L').chi over lattices L'
/// in position lambda from orbit_representative(m) with invariant m'.
/// Memoized per (q, kind, lambda, m, convention).
const std::map<int, LaurentScalar>& action_row(EtaleKind kind, const Coweight& lambda, int m,
                                                ActionConvention convention = ActionConvention::Sublattice);

/// (T_lambda * f)(L_m) = sum over L' in position lambda from L_m of
/// normalize(L').chi * f(normalize(L').m), extended linearly in h.
WaldFunction hecke_act(EtaleKind kind, const HeckeElement& h, const WaldFunction& f,
                       ActionConvention convention = ActionConvention::Sublattice);

/// hecke_act(A_(d,0), w0()); memoized per (q, kind, d).
WaldFunction w_d(EtaleKind kind, int d);

/// Number of colength-d sublattices of orbit_representative(m) lying on the
/// closed orbit.
long prop17_count(EtaleKind kind, int d, int m);

/// Number of lattices in the closure of position lambda from O^2 with orbit
/// invariant m.
long orbit_stratum_count(EtaleKind kind, const Coweight& lambda, int m);

/// orbit_stratum_count for every m at once (zero counts omitted).
std::map<int, long> orbit_stratum_histogram(EtaleKind kind, const Coweight& lambda);

/// Columns: hecke_act(T_(a,0), w0()) for a <= D; rows: orbit index m <= D.
ScalarMatrix multone_matrix(EtaleKind kind, int D);

/// Columns: w_d(d) for d <= D; rows: orbit index m <= D.
ScalarMatrix cs_matrix(EtaleKind kind, int D);

/// Character parameters.  Numeric values are only consulted when
/// symbolic is false.
struct CharacterParams {
  EtaleKind kind = EtaleKind::Split;
  bool symbolic = true;
  Rational alpha{1};
  Rational beta{1};
  Rational gamma{1};

  /// Throws ConfigInvalid when numeric and a relevant value is zero.
  void validate() const;
  Assignment assignment() const;
  /// chi_c(t) evaluated at the numeric values.
  Rational chi_c() const;
};

struct KeReport {
  int D = 0;
  Rational e1;
  Rational e2;
  /// Coordinates of A_(1,0) * K and (e1 + e2) * K in the {w_n} basis, n <= D + 1.
  std::vector<Rational> lhs_coords;
  std::vector<Rational> rhs_coords;
  /// Largest n such that the coordinates agree for all n' <= n (-1 if none).
  int window = -1;
  /// D - 1: the truncation-safe window.
  int required_window = 0;
  bool hecke_ok = false;
  /// A_(1,1) * K == e1 e2 K on every orbit index.
  bool central_ok = false;
  /// Largest prefix of orbit indices on which A_(1,0) * K and (e1 + e2) K agree
  /// pointwise (informational: each w_d reaches down to m = 0).
  int orbit_window = -1;
  bool pass = false;
};

/// Checks that the truncated K_E = sum_{d<=D} s_(0,-d)(e1, e2) w_d is an
/// eigenfunction of A_(1,0) with eigenvalue e1 + e2 up to truncation, and of
/// A_(1,1) with eigenvalue e1 e2.  Requires numeric params and D >= 2.
KeReport ke_check(int D, const Rational& e1, const CharacterParams& params);

}  // namespace wald
