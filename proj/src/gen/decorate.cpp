#include "couples/gen/decorate.hpp"

#include <algorithm>

#include "couples/category/constructions.hpp"
#include "couples/linalg/echelon.hpp"

namespace couples {

namespace {

FiltMorphism checked(const FiltCategory& cat, const char* name, const FiltObject& s, const FiltObject& t,
                     const Matrix& m) {
  if (auto level = cat.violation(s, t, m)) {
    throw DecorationError(name, level,
                          std::string("decoration breaks ") + name + ": not filtration-respecting at level " +
                              std::to_string(*level));
  }
  FiltMorphism f{s, t, m};
  const auto cert = is_strict(cat, f);
  if (!cert.strict) {
    const auto level = cert.level ? cert.level : strictness_failure_level(f);
    throw DecorationError(name, level,
                          std::string("decoration breaks strictness of ") + name +
                              (level ? " at level " + std::to_string(*level) : std::string()));
  }
  return f;
}

}  // namespace

ExactCouple<FiltObject> decorate(const ExactCouple<VectObject>& c, const FiltObject& d, const FiltObject& e) {
  if (d.dim() != c.D.dim || e.dim() != c.E.dim) throw DimensionError("decoration has the wrong dimensions");
  FiltCategory cat;
  auto alpha = checked(cat, "alpha", d, d, c.alpha.matrix);
  auto beta = checked(cat, "beta", d, e, c.beta.matrix);
  auto gamma = checked(cat, "gamma", e, d, c.gamma.matrix);
  return make_couple(cat, std::move(alpha), std::move(beta), std::move(gamma));
}

ExactCouple<FiltObject> decorate_trivial(const ExactCouple<VectObject>& c) {
  return decorate(c, FiltObject::trivial(c.D.dim), FiltObject::trivial(c.E.dim));
}

ExactCouple<FiltObject> graded_sum(const std::vector<GradedPiece>& pieces, std::mt19937_64& rng,
                                   bool change_basis) {
  std::size_t top = 0;
  for (const auto& piece : pieces) top = std::max(top, piece.level);
  Matrix alpha, beta, gamma;
  std::vector<std::size_t> d_levels, e_levels;
  for (const auto& piece : pieces) {
    alpha = block_diagonal(alpha, piece.couple.alpha.matrix);
    beta = block_diagonal(beta, piece.couple.beta.matrix);
    gamma = block_diagonal(gamma, piece.couple.gamma.matrix);
    d_levels.insert(d_levels.end(), piece.couple.D.dim, piece.level);
    e_levels.insert(e_levels.end(), piece.couple.E.dim, piece.level);
  }
  const std::size_t dd = d_levels.size(), de = e_levels.size();
  const Matrix hd = change_basis ? random_invertible(rng, dd) : Matrix::identity(dd);
  const Matrix he = change_basis ? random_invertible(rng, de) : Matrix::identity(de);
  const Matrix hd_inv = *inverse(hd), he_inv = *inverse(he);
  auto object = [&](const Matrix& h, const std::vector<std::size_t>& levels) {
    std::vector<Subspace> steps;
    for (std::size_t p = 0; p <= top + 1; ++p) {
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] >= p) cols.push_back(i);
      }
      steps.push_back(Subspace::span(h.select_columns(cols)));
    }
    return FiltObject(h.rows(), std::move(steps));
  };
  const FiltObject d = object(hd, d_levels), e = object(he, e_levels);
  FiltCategory cat;
  return make_couple(cat, make_morphism(cat, d, d, hd * alpha * hd_inv), make_morphism(cat, d, e, he * beta * hd_inv),
                     make_morphism(cat, e, d, hd * gamma * he_inv));
}

}  // namespace couples
