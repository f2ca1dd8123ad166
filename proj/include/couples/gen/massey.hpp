#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "couples/engine/exact_couple.hpp"
#include "couples/gen/filtered_complex.hpp"
#include "couples/vect/vect_category.hpp"

namespace couples {

/// A subquotient top / bottom of an ambient space, with chosen representatives.
struct Subquotient {
  Subspace top;
  Subspace bottom;
  /// Columns: ambient representatives of a basis of top / bottom.
  Matrix representatives;
  /// top coordinates -> quotient coordinates.
  Matrix projection;

  std::size_t dim() const { return representatives.cols(); }
  /// Classes of the columns of xs, which must lie in top.
  Matrix classes(const Matrix& xs) const;
};

Subquotient make_subquotient(const Subspace& top, const Subspace& bottom);

/// Where each (p, n) summand sits inside D or E.
struct BlockIndex {
  std::size_t p;
  std::size_t n;
  std::size_t offset;
  std::size_t dim;
};

struct MasseyCouple {
  /// The complex the couple is built from (after the cone cap).
  FilteredComplex complex;
  ExactCouple<VectObject> couple;
  /// D = (+) H_n(F_p), E = (+) H_n(F_p / F_{p+1}), ordered by (p, n).
  std::vector<BlockIndex> d_blocks;
  std::vector<BlockIndex> e_blocks;
};

/**
 * Exact couple of a filtered complex. The complex is first capped with
 * cap_with_cone() so that the couple is finite; alpha comes from the
 * inclusions F_{p+1} ⊆ F_p, beta from F_p -> F_p / F_{p+1}, and gamma is the
 * connecting map, evaluated on a lift and re-checked on a second random lift.
 */
MasseyCouple massey_couple(const FilteredComplex& fc, std::uint64_t seed = 0);

}  // namespace couples
