#include "couples/linalg/subspace.hpp"

#include "couples/linalg/echelon.hpp"

namespace couples {

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.basis_ = Matrix(ambient_dim, 0);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.basis_ = Matrix::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const Matrix& generators) {
  // Row reduction of the transposed generators gives the reduced column
  // echelon form of the span.
  const RrefResult r = rref(generators.transpose());
  Subspace s;
  s.basis_ = Matrix(generators.rows(), r.rank);
  for (std::size_t j = 0; j < r.rank; ++j) {
    for (std::size_t i = 0; i < generators.rows(); ++i) s.basis_(i, j) = r.reduced(j, i);
  }
  s.pivots_ = r.pivots;
  return s;
}

std::optional<std::vector<Rational>> Subspace::coordinates(std::span<const Rational> vector) const {
  if (vector.size() != ambient_dim()) throw DimensionError("subspace membership: ambient mismatch");
  std::vector<Rational> coords(dim());
  for (std::size_t j = 0; j < dim(); ++j) coords[j] = vector[pivots_[j]];
  // Reconstruct and compare; pivot rows pin the coefficients uniquely.
  for (std::size_t i = 0; i < ambient_dim(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(basis_(i, j)) != 0) acc += basis_(i, j) * coords[j];
    }
    if (acc != vector[i]) return std::nullopt;
  }
  return coords;
}

bool Subspace::contains(std::span<const Rational> vector) const {
  return coordinates(vector).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionError("subspace containment: ambient mismatch");
  for (std::size_t j = 0; j < other.dim(); ++j) {
    if (!contains(other.basis_.column(j))) return false;
  }
  return true;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("subspace sum: ambient mismatch");
  return Subspace::span(hstack(u.basis(), v.basis()));
}

Subspace intersection(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("subspace intersection: ambient mismatch");
  // u a = v b  <=>  [u | -v] (a; b) = 0
  const Subspace coeffs = nullspace_basis(hstack(u.basis(), -v.basis()));
  return Subspace::span(u.basis() * coeffs.basis().row_block(0, u.dim()));
}

Subspace image_of(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionError("image_of: shape mismatch");
  return Subspace::span(m * s.basis());
}

Subspace preimage_of(const Matrix& m, const Subspace& s) {
  if (m.rows() != s.ambient_dim()) throw DimensionError("preimage_of: shape mismatch");
  // m x = s c  <=>  [m | -s] (x; c) = 0
  const Subspace sol = nullspace_basis(hstack(m, -s.basis()));
  return Subspace::span(sol.basis().row_block(0, m.cols()));
}

SubspaceComparison compare(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("subspace comparison: ambient mismatch");
  return {u == v, sum(u, v), intersection(u, v), u.contains(v)};
}

std::vector<std::size_t> complement_coordinates(const Subspace& s) {
  std::vector<bool> pivot(s.ambient_dim(), false);
  for (auto p : s.pivot_rows()) pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.ambient_dim(); ++i) {
    if (!pivot[i]) out.push_back(i);
  }
  return out;
}

Matrix quotient_projection(const Subspace& s) {
  // y = sum_j y[p_j] b_j + sum_k d_k e_{c_k}, hence d_k = y[c_k] - sum_j b_j[c_k] y[p_j].
  const auto comp = complement_coordinates(s);
  const auto& piv = s.pivot_rows();
  Matrix q(comp.size(), s.ambient_dim());
  for (std::size_t k = 0; k < comp.size(); ++k) {
    q(k, comp[k]) = 1;
    for (std::size_t j = 0; j < piv.size(); ++j) q(k, piv[j]) = -s.basis()(comp[k], j);
  }
  return q;
}

}  // namespace couples
