#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wald/quadform.hpp"

namespace wald {

/// Entries of a symmetric matrix [[x, y], [y, z]] with no determinant check.
struct FormEntries {
  LaurentPoly x;
  LaurentPoly y;
  LaurentPoly z;
};

/// Exhaustive orbit structure of GL2(O/t^N) x (O/t^N)* acting on symmetric
/// 2x2 matrices over O/t^N by B -> A B A^t eps, for the session q.
///
/// A breadth-first search is started from every diagonal form
/// diag(t^a, t^b w) with a >= b >= 0, a + b < N and w in {1, nonsquare},
/// using elementary transvections, diag(g, 1) and scalar similitudes as
/// generators.  Parent links are kept so that an explicit (A, eps) can be
/// recovered for every reached form.
class SimilitudeOrbits {
 public:
  struct Root {
    PhiInvariant inv;
    SymMatrixO form;
  };

  struct Witness {
    std::size_t root = 0;
    /// A * root * A^t * epsilon == form  (mod t^N)
    Mat2 A;
    LaurentPoly epsilon;
  };

  /// Runs the search.  The state space has q^(3N) elements.
  explicit SimilitudeOrbits(int precision);

  int precision() const { return precision_; }
  const std::vector<Root>& roots() const { return roots_; }

  std::size_t state_count() const { return orbit_.size(); }
  /// Forms with val(det) < N.
  std::size_t nondegenerate_count() const { return nondegenerate_; }
  std::size_t reached_count() const { return reached_; }
  /// False if a search from one root ran into another root's orbit.
  bool roots_disjoint() const { return disjoint_; }

  /// Index of the root whose orbit contains `form` (entries reduced mod t^N).
  std::optional<std::size_t> orbit_of(const SymMatrixO& form) const;

  /// Explicit transform from the orbit root to `form`; throws ConfigInvalid
  /// if the form was not reached.
  Witness witness(const SymMatrixO& form) const;

  /// The form stored at a state index (det may vanish mod t^N).
  FormEntries decode(std::size_t state) const;

 private:
  std::size_t encode(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z) const;

  int precision_;
  std::uint32_t q_;
  std::vector<Root> roots_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int8_t> generator_;
  std::vector<std::int16_t> orbit_;
  std::size_t nondegenerate_ = 0;
  std::size_t reached_ = 0;
  bool disjoint_ = true;
  std::vector<std::pair<Mat2, LaurentPoly>> generator_matrices_;
};

}  // namespace wald
