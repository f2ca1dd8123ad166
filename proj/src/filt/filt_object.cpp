#include "couples/filt/filt_object.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "couples/linalg/echelon.hpp"

namespace couples {

FiltObject::FiltObject(std::size_t dim, std::vector<Subspace> steps) : dim_(dim) {
  if (steps.size() < 2) throw std::invalid_argument("filtration needs at least F_0 and F_1");
  for (std::size_t p = 0; p < steps.size(); ++p) {
    if (steps[p].ambient_dim() != dim) {
      throw std::invalid_argument("filtration step " + std::to_string(p) + " has the wrong ambient dimension");
    }
  }
  if (steps.front().dim() != dim) throw std::invalid_argument("filtration step 0 must be the whole space");
  if (steps.back().dim() != 0) throw std::invalid_argument("last filtration step must be zero");
  for (std::size_t p = 0; p + 1 < steps.size(); ++p) {
    if (!steps[p].contains(steps[p + 1])) {
      throw std::invalid_argument("filtration is not decreasing at step " + std::to_string(p + 1));
    }
  }
  std::size_t first_zero = 0;
  while (steps[first_zero].dim() != 0) ++first_zero;
  steps.resize(std::max<std::size_t>(first_zero, 1) + 1, Subspace::zero(dim));
  steps_ = std::move(steps);
}

FiltObject FiltObject::trivial(std::size_t dim) {
  return FiltObject(dim, {Subspace::full(dim), Subspace::zero(dim)});
}

FiltObject FiltObject::from_flag(const Matrix& basis, const std::vector<std::size_t>& step_dims) {
  std::vector<Subspace> steps;
  for (auto d : step_dims) steps.push_back(Subspace::span(basis.column_block(0, d)));
  return FiltObject(basis.rows(), std::move(steps));
}

const Subspace& FiltObject::step(std::size_t p) const {
  return p < steps_.size() ? steps_[p] : steps_.back();
}

std::size_t FiltObject::level_of(std::span<const Rational> v) const {
  std::size_t p = 0;
  while (p + 1 < steps_.size() && steps_[p + 1].contains(v)) ++p;
  return p;
}

AdaptedBasis adapted_basis(const FiltObject& x) {
  AdaptedBasis out{Matrix(x.dim(), 0), {}};
  Subspace current = Subspace::zero(x.dim());
  for (std::size_t p = x.length(); p-- > 0;) {
    const Matrix& b = x.step(p).basis();
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const auto v = b.column(j);
      if (current.contains(v)) continue;
      const Matrix col = b.column_block(j, 1);
      out.basis = hstack(out.basis, col);
      out.levels.push_back(p);
      current = sum(current, Subspace::span(col));
    }
  }
  return out;
}

}  // namespace couples
