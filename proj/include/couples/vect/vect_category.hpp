#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "couples/category/backend.hpp"

namespace couples {

/// A finite-dimensional coordinate space Q^dim.
struct VectObject {
  std::size_t dim = 0;
  friend bool operator==(const VectObject&, const VectObject&) = default;
};

using VectMorphism = Arrow<VectObject>;

/**
 * Finite-dimensional Q-vector spaces: the abelian backend.
 *
 * Kernels are inclusions of the canonical nullspace basis. Cokernels project
 * onto the standard coordinates that are not pivots of the image, so every
 * quotient is again a plain coordinate space.
 */
class VectCategory {
 public:
  using Object = VectObject;
  using Morphism = VectMorphism;

  static constexpr std::string_view kName = "vect";
  static constexpr bool kAbelian = true;
  static constexpr bool kQuasiAbelian = true;
  static constexpr bool kFullHom = true;

  std::size_t dim(const Object& x) const { return x.dim; }
  bool same_object(const Object& a, const Object& b) const { return a == b; }
  Object zero_object() const { return {}; }
  std::optional<std::size_t> violation(const Object&, const Object&, const Matrix&) const {
    return std::nullopt;
  }

  Morphism kernel(const Morphism& f) const;
  Morphism cokernel(const Morphism& f) const;
  /// Block direct sum; the first summand occupies the leading coordinates.
  Biproduct<Object> direct_sum(const Object& a, const Object& b) const;
  std::vector<Matrix> hom_basis(const Object& source, const Object& target) const;

  Object random_object(std::mt19937_64& rng, std::size_t max_dim) const;
  Morphism random_morphism(std::mt19937_64& rng, const Object& source, const Object& target) const;
};

/// Small random rational, mostly integers in [-3, 3] with some halves.
Rational random_entry(std::mt19937_64& rng);

/// Random matrix with entries from random_entry().
Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols);

/// Random invertible matrix (retries until the draw has full rank).
Matrix random_invertible(std::mt19937_64& rng, std::size_t n);

}  // namespace couples
