#pragma once

#include <cstddef>
#include <vector>

#include "couples/linalg/subspace.hpp"

namespace couples {

/**
 * Q^dim with a finite decreasing filtration F_0 = Q^dim ⊇ F_1 ⊇ ... ⊇ F_k = 0.
 *
 * step(p) for p > k repeats F_k = 0, which is how filtrations of different
 * lengths are compared. Trailing zero steps beyond the first are dropped on
 * construction, so equal objects have equal step lists.
 */
class FiltObject {
 public:
  FiltObject() : FiltObject(0, {Subspace::zero(0), Subspace::zero(0)}) {}
  /// Validates and canonicalizes; throws std::invalid_argument on a bad flag.
  FiltObject(std::size_t dim, std::vector<Subspace> steps);

  /// V ⊇ 0
  static FiltObject trivial(std::size_t dim);
  /// Steps given by nested prefixes of the columns of an invertible basis:
  /// F_p = span of the first step_dims[p] columns.
  static FiltObject from_flag(const Matrix& basis, const std::vector<std::size_t>& step_dims);

  std::size_t dim() const { return dim_; }
  /// k: index of the first zero step.
  std::size_t length() const { return steps_.size() - 1; }
  const Subspace& step(std::size_t p) const;
  const std::vector<Subspace>& steps() const { return steps_; }
  /// Largest p with v in F_p.
  std::size_t level_of(std::span<const Rational> v) const;

  friend bool operator==(const FiltObject& a, const FiltObject& b) {
    return a.dim_ == b.dim_ && a.steps_ == b.steps_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Subspace> steps_;
};

/// A basis of Q^dim refining the flag: columns grouped by level, deepest first.
struct AdaptedBasis {
  Matrix basis;
  std::vector<std::size_t> levels;  // level of each column
};

AdaptedBasis adapted_basis(const FiltObject& x);

}  // namespace couples
