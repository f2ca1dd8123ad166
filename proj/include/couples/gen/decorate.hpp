#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "couples/engine/exact_couple.hpp"
#include "couples/filt/filt_category.hpp"
#include "couples/vect/vect_category.hpp"

namespace couples {

/// A decoration that turns alpha, beta or gamma into a non-morphism or a
/// non-strict morphism.
class DecorationError : public CategoryError {
 public:
  DecorationError(const std::string& morphism, std::optional<std::size_t> level, const std::string& what)
      : CategoryError(what), morphism_(morphism), level_(level) {}
  const std::string& morphism() const { return morphism_; }
  std::optional<std::size_t> level() const { return level_; }

 private:
  std::string morphism_;
  std::optional<std::size_t> level_;
};

/// Every object gets the filtration V ⊇ 0.
ExactCouple<FiltObject> decorate_trivial(const ExactCouple<VectObject>& c);

/// Puts the given filtrations on D and E; alpha, beta, gamma must respect them
/// and stay strict.
ExactCouple<FiltObject> decorate(const ExactCouple<VectObject>& c, const FiltObject& d, const FiltObject& e);

struct GradedPiece {
  ExactCouple<VectObject> couple;
  /// The piece lies in F_p exactly for p <= level.
  std::size_t level;
};

/**
 * Direct sum of vect couples placed at fixed filtration levels. The maps are
 * block diagonal, hence strict; with change_basis the whole couple is moved
 * by random linear automorphisms of D and E so the steps are not coordinate
 * subspaces.
 */
ExactCouple<FiltObject> graded_sum(const std::vector<GradedPiece>& pieces, std::mt19937_64& rng,
                                   bool change_basis = true);

}  // namespace couples
