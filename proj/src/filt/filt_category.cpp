#include "couples/filt/filt_category.hpp"

#include <algorithm>

#include "couples/linalg/echelon.hpp"
#include "couples/vect/vect_category.hpp"

namespace couples {

std::optional<std::size_t> FiltCategory::violation(const FiltObject& source, const FiltObject& target,
                                                   const Matrix& m) const {
  if (m.rows() != target.dim() || m.cols() != source.dim()) {
    throw DimensionError("filtered morphism has the wrong shape");
  }
  for (std::size_t p = 1; p < source.length(); ++p) {
    const Matrix img = m * source.step(p).basis();
    const Subspace& allowed = target.step(p);
    for (std::size_t j = 0; j < img.cols(); ++j) {
      if (!allowed.contains(img.column(j))) return p;
    }
  }
  return std::nullopt;
}

FiltMorphism FiltCategory::kernel(const FiltMorphism& f) const {
  const Subspace null = nullspace_basis(f.matrix);
  std::vector<Subspace> steps;
  for (std::size_t p = 0; p <= f.source.length(); ++p) {
    const Subspace inter = intersection(null, f.source.step(p));
    // Coordinates in the echelon basis are read off the pivot rows.
    steps.push_back(Subspace::span(inter.basis().select_rows(null.pivot_rows())));
  }
  return {FiltObject(null.dim(), std::move(steps)), f.source, null.basis()};
}

FiltMorphism FiltCategory::cokernel(const FiltMorphism& f) const {
  Matrix q = quotient_projection(column_space(f.matrix));
  std::vector<Subspace> steps;
  for (std::size_t p = 0; p <= f.target.length(); ++p) steps.push_back(image_of(q, f.target.step(p)));
  FiltObject quotient(q.rows(), std::move(steps));
  return {f.target, std::move(quotient), std::move(q)};
}

Biproduct<FiltObject> FiltCategory::direct_sum(const FiltObject& a, const FiltObject& b) const {
  const std::size_t k = std::max(a.length(), b.length());
  std::vector<Subspace> steps;
  for (std::size_t p = 0; p <= k; ++p) {
    steps.push_back(Subspace::span(block_diagonal(a.step(p).basis(), b.step(p).basis())));
  }
  const FiltObject s(a.dim() + b.dim(), std::move(steps));
  const Matrix ia = vstack(Matrix::identity(a.dim()), Matrix(b.dim(), a.dim()));
  const Matrix ib = vstack(Matrix(a.dim(), b.dim()), Matrix::identity(b.dim()));
  return {s, {a, s, ia}, {b, s, ib}, {s, a, ia.transpose()}, {s, b, ib.transpose()}};
}

std::vector<Matrix> FiltCategory::hom_basis(const FiltObject& source, const FiltObject& target) const {
  // A morphism is free on an adapted basis vector of level l, subject only to
  // landing in F_l(target).
  const AdaptedBasis ab = adapted_basis(source);
  const Matrix inv = *inverse(ab.basis);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < ab.levels.size(); ++i) {
    const Matrix row = inv.row_block(i, 1);
    const Matrix& allowed = target.step(ab.levels[i]).basis();
    for (std::size_t j = 0; j < allowed.cols(); ++j) out.push_back(allowed.column_block(j, 1) * row);
  }
  return out;
}

FiltObject FiltCategory::random_object(std::mt19937_64& rng, std::size_t max_dim) const {
  std::uniform_int_distribution<std::size_t> dim_dist(0, max_dim);
  std::uniform_int_distribution<std::size_t> level_dist(1, 3);
  const std::size_t d = dim_dist(rng);
  const std::size_t k = level_dist(rng);
  std::vector<std::size_t> dims{d};
  for (std::size_t p = 1; p < k; ++p) {
    std::uniform_int_distribution<std::size_t> next(0, dims.back());
    dims.push_back(next(rng));
  }
  dims.push_back(0);
  return FiltObject::from_flag(random_invertible(rng, d), dims);
}

FiltMorphism FiltCategory::random_morphism(std::mt19937_64& rng, const FiltObject& source,
                                           const FiltObject& target) const {
  const AdaptedBasis ab = adapted_basis(source);
  const Matrix inv = *inverse(ab.basis);
  bool hom_nonzero = false;
  for (auto l : ab.levels) hom_nonzero = hom_nonzero || target.step(l).dim() > 0;
  Matrix m;
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix images(target.dim(), source.dim());
    for (std::size_t i = 0; i < ab.levels.size(); ++i) {
      const Matrix& allowed = target.step(ab.levels[i]).basis();
      const Matrix v = allowed * random_matrix(rng, allowed.cols(), 1);
      for (std::size_t r = 0; r < target.dim(); ++r) images(r, i) = v(r, 0);
    }
    m = images * inv;
    if (!hom_nonzero || !m.is_zero()) break;
  }
  return {source, target, std::move(m)};
}

std::optional<std::size_t> strictness_failure_level(const FiltMorphism& f) {
  const Subspace im = column_space(f.matrix);
  const std::size_t k = std::max(f.source.length(), f.target.length());
  for (std::size_t p = 0; p <= k; ++p) {
    if (image_of(f.matrix, f.source.step(p)) != intersection(im, f.target.step(p))) return p;
  }
  return std::nullopt;
}

bool is_strict_filt(const FiltMorphism& f) { return !strictness_failure_level(f).has_value(); }

}  // namespace couples
