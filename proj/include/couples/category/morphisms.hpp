#pragma once

#include <string>

#include "couples/category/backend.hpp"

namespace couples {

template <LinearCategory C>
using MorphismOf = typename C::Morphism;
template <LinearCategory C>
using ObjectOf = typename C::Object;

/// Wraps a matrix as a morphism, rejecting shape errors and matrices outside Hom.
template <LinearCategory C>
MorphismOf<C> make_morphism(const C& cat, const ObjectOf<C>& source, const ObjectOf<C>& target,
                            Matrix matrix) {
  if (matrix.rows() != cat.dim(target) || matrix.cols() != cat.dim(source)) {
    throw DimensionError("morphism matrix is " + std::to_string(matrix.rows()) + "x" +
                         std::to_string(matrix.cols()) + ", expected " +
                         std::to_string(cat.dim(target)) + "x" + std::to_string(cat.dim(source)));
  }
  if (auto level = cat.violation(source, target, matrix)) {
    throw NotAMorphism("matrix does not respect the filtration at level " + std::to_string(*level),
                       level);
  }
  return {source, target, std::move(matrix)};
}

template <LinearCategory C>
MorphismOf<C> identity(const C& cat, const ObjectOf<C>& x) {
  return {x, x, Matrix::identity(cat.dim(x))};
}

template <LinearCategory C>
MorphismOf<C> zero_morphism(const C& cat, const ObjectOf<C>& source, const ObjectOf<C>& target) {
  return {source, target, Matrix(cat.dim(target), cat.dim(source))};
}

/// g o f
template <LinearCategory C>
MorphismOf<C> compose(const C& cat, const MorphismOf<C>& g, const MorphismOf<C>& f) {
  if (!cat.same_object(f.target, g.source)) {
    throw CategoryError("compose: target of the first arrow is not the source of the second");
  }
  return {f.source, g.target, g.matrix * f.matrix};
}

template <LinearCategory C>
MorphismOf<C> compose(const C& cat, const MorphismOf<C>& h, const MorphismOf<C>& g,
                      const MorphismOf<C>& f) {
  return compose(cat, h, compose(cat, g, f));
}

template <LinearCategory C>
void require_parallel(const C& cat, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  if (!cat.same_object(f.source, g.source) || !cat.same_object(f.target, g.target)) {
    throw CategoryError("morphisms are not parallel");
  }
}

template <LinearCategory C>
MorphismOf<C> add(const C& cat, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  require_parallel(cat, f, g);
  return {f.source, f.target, f.matrix + g.matrix};
}

template <LinearCategory C>
MorphismOf<C> subtract(const C& cat, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  require_parallel(cat, f, g);
  return {f.source, f.target, f.matrix - g.matrix};
}

template <LinearCategory C>
MorphismOf<C> negate(const C&, const MorphismOf<C>& f) {
  return {f.source, f.target, -f.matrix};
}

/// Exact equality: same endpoints and same matrix.
template <LinearCategory C>
bool equal(const C& cat, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  return cat.same_object(f.source, g.source) && cat.same_object(f.target, g.target) &&
         f.matrix == g.matrix;
}

template <LinearCategory C>
bool is_zero(const C&, const MorphismOf<C>& f) {
  return f.matrix.is_zero();
}

template <LinearCategory C>
bool is_zero_object(const C& cat, const ObjectOf<C>& x) {
  return cat.dim(x) == 0;
}

/// Monic iff the kernel is the zero object.
template <LinearCategory C>
bool is_monic(const C& cat, const MorphismOf<C>& f) {
  return is_zero_object(cat, cat.kernel(f).source);
}

/// Epic iff the cokernel is the zero object.
template <LinearCategory C>
bool is_epic(const C& cat, const MorphismOf<C>& f) {
  return is_zero_object(cat, cat.cokernel(f).target);
}

template <LinearCategory C>
MorphismOf<C> power(const C& cat, const MorphismOf<C>& f, std::size_t k) {
  MorphismOf<C> out = identity(cat, f.source);
  for (std::size_t i = 0; i < k; ++i) out = compose(cat, f, out);
  return out;
}

}  // namespace couples
