#pragma once

#include <random>
#include <string>
#include <vector>

#include "couples/gen/decorate.hpp"
#include "couples/gen/massey.hpp"

namespace couples {

/// Massey couple of a fresh random filtered complex.
MasseyCouple random_massey_couple(std::mt19937_64& rng, const RandomComplexOptions& opts = {});

/// Graded sum of two or three small random Massey couples at distinct levels.
ExactCouple<FiltObject> random_graded_filt_couple(std::mt19937_64& rng);

// Elementary couples.

/// D = E = 0
ExactCouple<VectObject> zero_couple();
/// D = Q, E = 0, alpha = id
ExactCouple<VectObject> degenerate_couple();
/// D = Q, E = Q^2, alpha = 0, beta = e1 inclusion, gamma = e2 projection
ExactCouple<VectObject> alpha_zero_couple();
/// D = Q^2 with alpha : d1 -> d2, E = Q^2, beta(d1) = e1, gamma(e2) = d2; the
/// differential is zero.
ExactCouple<VectObject> partial_zero_couple();

/// Filtered couple of dimension (4, 4): alpha_zero, partial_zero and
/// degenerate placed at levels 0, 1, 2 and moved to a fixed random basis.
ExactCouple<FiltObject> f1_couple();

/// Identity of Q from the filtration Q ⊇ 0 to Q ⊇ Q ⊇ 0: monic, epic, not strict.
FiltMorphism shift_morphism();

}  // namespace couples
