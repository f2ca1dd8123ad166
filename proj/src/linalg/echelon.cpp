#include "couples/linalg/echelon.hpp"

#include <utility>

namespace couples {

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// Reduces in place over columns [0, limit); returns the pivot columns.
std::vector<std::size_t> reduce(Matrix& m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < limit && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, r, p);
    if (m(r, c) != 1) {
      const Rational inv = 1 / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(r, j)) != 0) m(r, j) *= inv;
      }
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix null_basis_from_reduced(const Matrix& reduced, const std::vector<std::size_t>& pivots,
                               std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix basis(cols, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -reduced(i, free[k]);
  }
  return basis;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}, 0};
  out.pivots = reduce(out.reduced, m.cols());
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return reduce(work, m.cols()).size();
}

Subspace nullspace_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  return Subspace::span(null_basis_from_reduced(r.reduced, r.pivots, m.cols()));
}

Subspace column_space(const Matrix& m) { return Subspace::span(m); }

SolveResult solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve: a and b must have the same row count");
  Matrix work = hstack(a, b);
  const std::vector<std::size_t> pivots = reduce(work, work.cols());
  SolveResult out;
  for (auto p : pivots) {
    if (p >= a.cols()) {
      out.kind = SolveKind::inconsistent;
      return out;
    }
  }
  out.particular = Matrix(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out.particular(pivots[i], j) = work(i, a.cols() + j);
  }
  out.homogeneous = null_basis_from_reduced(work, pivots, a.cols());
  out.kind = out.homogeneous.cols() == 0 ? SolveKind::unique : SolveKind::family;
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  SolveResult r = solve(m, Matrix::identity(m.rows()));
  if (r.kind != SolveKind::unique) return std::nullopt;
  return std::move(r.particular);
}

}  // namespace couples
