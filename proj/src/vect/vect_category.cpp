#include "couples/vect/vect_category.hpp"

#include "couples/linalg/echelon.hpp"

namespace couples {

Rational random_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(-3, 3);
  std::uniform_int_distribution<int> kind(0, 9);
  const int k = kind(rng);
  if (k < 3) return 0;
  Rational r(value(rng), k == 9 ? 2 : 1);
  r.canonicalize();
  return r;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_entry(rng);
  }
  return m;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(m(i, i)) == 0) m(i, i) = 1;
    }
    if (rank(m) == n) return m;
  }
}

VectMorphism VectCategory::kernel(const VectMorphism& f) const {
  const Subspace null = nullspace_basis(f.matrix);
  return {Object{null.dim()}, f.source, null.basis()};
}

VectMorphism VectCategory::cokernel(const VectMorphism& f) const {
  Matrix q = quotient_projection(column_space(f.matrix));
  const Object quotient{q.rows()};
  return {f.target, quotient, std::move(q)};
}

Biproduct<VectObject> VectCategory::direct_sum(const VectObject& a, const VectObject& b) const {
  const Object s{a.dim + b.dim};
  const Matrix ia = vstack(Matrix::identity(a.dim), Matrix(b.dim, a.dim));
  const Matrix ib = vstack(Matrix(a.dim, b.dim), Matrix::identity(b.dim));
  return {s, {a, s, ia}, {b, s, ib}, {s, a, ia.transpose()}, {s, b, ib.transpose()}};
}

std::vector<Matrix> VectCategory::hom_basis(const VectObject& source, const VectObject& target) const {
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < source.dim; ++j) {
    for (std::size_t i = 0; i < target.dim; ++i) {
      Matrix e(target.dim, source.dim);
      e(i, j) = 1;
      out.push_back(std::move(e));
    }
  }
  return out;
}

VectObject VectCategory::random_object(std::mt19937_64& rng, std::size_t max_dim) const {
  std::uniform_int_distribution<std::size_t> d(0, max_dim);
  return {d(rng)};
}

VectMorphism VectCategory::random_morphism(std::mt19937_64& rng, const VectObject& source,
                                           const VectObject& target) const {
  return {source, target, random_matrix(rng, target.dim, source.dim)};
}

}  // namespace couples
