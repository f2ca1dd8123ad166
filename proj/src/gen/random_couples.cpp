#include "couples/gen/random_couples.hpp"

#include <algorithm>
#include <numeric>

namespace couples {

MasseyCouple random_massey_couple(std::mt19937_64& rng, const RandomComplexOptions& opts) {
  const auto fc = random_filtered_complex(rng, opts);
  return massey_couple(fc, rng());
}

ExactCouple<FiltObject> random_graded_filt_couple(std::mt19937_64& rng) {
  std::vector<std::size_t> levels{0, 1, 2};
  std::shuffle(levels.begin(), levels.end(), rng);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
  std::vector<GradedPiece> pieces;
  for (std::size_t i = 0; i < count; ++i) {
    RandomComplexOptions opts;
    opts.max_total_dim = 3;
    opts.degrees = 2;
    opts.levels = 2;
    pieces.push_back({random_massey_couple(rng, opts).couple, levels[i]});
  }
  return graded_sum(pieces, rng);
}

ExactCouple<VectObject> zero_couple() {
  VectCategory cat;
  const VectObject z{0};
  return make_couple(cat, VectMorphism{z, z, Matrix(0, 0)}, VectMorphism{z, z, Matrix(0, 0)},
                     VectMorphism{z, z, Matrix(0, 0)});
}

ExactCouple<VectObject> degenerate_couple() {
  VectCategory cat;
  const VectObject d{1}, e{0};
  return make_couple(cat, VectMorphism{d, d, Matrix::identity(1)}, VectMorphism{d, e, Matrix(0, 1)},
                     VectMorphism{e, d, Matrix(1, 0)});
}

ExactCouple<VectObject> alpha_zero_couple() {
  VectCategory cat;
  const VectObject d{1}, e{2};
  return make_couple(cat, VectMorphism{d, d, Matrix(1, 1)}, VectMorphism{d, e, Matrix::from_rows({{1}, {0}})},
                     VectMorphism{e, d, Matrix::from_rows({{0, 1}})});
}

ExactCouple<VectObject> partial_zero_couple() {
  VectCategory cat;
  const VectObject d{2}, e{2};
  return make_couple(cat, VectMorphism{d, d, Matrix::from_rows({{0, 0}, {1, 0}})},
                     VectMorphism{d, e, Matrix::from_rows({{1, 0}, {0, 0}})},
                     VectMorphism{e, d, Matrix::from_rows({{0, 0}, {0, 1}})});
}

ExactCouple<FiltObject> f1_couple() {
  std::mt19937_64 rng(20130601);
  return graded_sum({{alpha_zero_couple(), 0}, {partial_zero_couple(), 1}, {degenerate_couple(), 2}}, rng);
}

FiltMorphism shift_morphism() {
  const FiltObject coarse = FiltObject::trivial(1);
  const FiltObject fine(1, {Subspace::full(1), Subspace::full(1), Subspace::zero(1)});
  return {coarse, fine, Matrix::identity(1)};
}

}  // namespace couples
