#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "couples/category/backend.hpp"
#include "couples/filt/filt_object.hpp"

namespace couples {

using FiltMorphism = Arrow<FiltObject>;

/**
 * Finitely filtered finite-dimensional Q-vector spaces.
 *
 * Morphisms are matrices with M F_p(source) ⊆ F_p(target) for every p. The
 * category is quasiabelian but not abelian: a bijective morphism need not
 * have a filtration-respecting inverse.
 *
 * Kernels carry the induced filtration K ∩ F_p(source); cokernels carry the
 * image filtration q(F_p(target)).
 */
class FiltCategory {
 public:
  using Object = FiltObject;
  using Morphism = FiltMorphism;

  static constexpr std::string_view kName = "filt";
  static constexpr bool kAbelian = false;
  static constexpr bool kQuasiAbelian = true;
  static constexpr bool kFullHom = false;

  std::size_t dim(const Object& x) const { return x.dim(); }
  bool same_object(const Object& a, const Object& b) const { return a == b; }
  Object zero_object() const { return {}; }
  /// First level p with M F_p(source) not inside F_p(target).
  std::optional<std::size_t> violation(const Object& source, const Object& target,
                                       const Matrix& m) const;

  Morphism kernel(const Morphism& f) const;
  Morphism cokernel(const Morphism& f) const;
  Biproduct<Object> direct_sum(const Object& a, const Object& b) const;
  std::vector<Matrix> hom_basis(const Object& source, const Object& target) const;

  /// Random flag on Q^d, d <= max_dim, with one to three nonzero levels.
  Object random_object(std::mt19937_64& rng, std::size_t max_dim) const;
  /// Images of an adapted basis drawn from the matching filtration steps;
  /// zero draws are discarded while Hom is nonzero.
  Morphism random_morphism(std::mt19937_64& rng, const Object& source, const Object& target) const;
};

/// Strictness via f(F_p source) = im f ∩ F_p target for all p.
bool is_strict_filt(const FiltMorphism& f);

/// First level where is_strict_filt fails.
std::optional<std::size_t> strictness_failure_level(const FiltMorphism& f);

}  // namespace couples
