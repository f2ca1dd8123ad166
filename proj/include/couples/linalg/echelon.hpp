#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "couples/linalg/matrix.hpp"
#include "couples/linalg/subspace.hpp"

namespace couples {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination; the pivot is the first nonzero entry of each column.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// {x : m x = 0}
Subspace nullspace_basis(const Matrix& m);

Subspace column_space(const Matrix& m);

enum class SolveKind { unique, family, inconsistent };

/**
 * Solutions of a X = b. On success `particular` satisfies a * particular = b
 * and the full solution set is particular + homogeneous * Y for arbitrary Y,
 * where the columns of `homogeneous` span null(a).
 */
struct SolveResult {
  SolveKind kind = SolveKind::inconsistent;
  Matrix particular;
  Matrix homogeneous;

  bool consistent() const { return kind != SolveKind::inconsistent; }
};

SolveResult solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace couples
