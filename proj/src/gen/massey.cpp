#include "couples/gen/massey.hpp"

#include <map>
#include <random>
#include <utility>

#include "couples/linalg/echelon.hpp"

namespace couples {

Matrix Subquotient::classes(const Matrix& xs) const {
  Matrix coords(top.dim(), xs.cols());
  for (std::size_t j = 0; j < xs.cols(); ++j) {
    const auto x = xs.column(j);
    const auto c = top.coordinates(x);
    if (!c) throw ComplexError("vector is not in the top of the subquotient");
    for (std::size_t i = 0; i < c->size(); ++i) coords(i, j) = (*c)[i];
  }
  return projection * coords;
}

Subquotient make_subquotient(const Subspace& top, const Subspace& bottom) {
  Matrix inner(top.dim(), bottom.dim());
  for (std::size_t j = 0; j < bottom.dim(); ++j) {
    const auto c = top.coordinates(bottom.basis().column(j));
    if (!c) throw ComplexError("bottom of a subquotient is not inside the top");
    for (std::size_t i = 0; i < c->size(); ++i) inner(i, j) = (*c)[i];
  }
  const Subspace b = Subspace::span(inner);
  const auto comp = complement_coordinates(b);
  return {top, bottom, top.basis().select_columns(comp), quotient_projection(b)};
}

namespace {

using Key = std::pair<std::size_t, std::size_t>;  // (p, n)

struct Layout {
  std::vector<BlockIndex> blocks;
  std::map<Key, std::size_t> position;
  std::size_t total = 0;

  void add(std::size_t p, std::size_t n, std::size_t dim) {
    position[{p, n}] = blocks.size();
    blocks.push_back({p, n, total, dim});
    total += dim;
  }
  const BlockIndex& at(std::size_t p, std::size_t n) const { return blocks[position.at({p, n})]; }
};

void place(Matrix& m, const BlockIndex& row, const BlockIndex& col, const Matrix& block) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) m(row.offset + r, col.offset + c) = block(r, c);
}

}  // namespace

MasseyCouple massey_couple(const FilteredComplex& input, std::uint64_t seed) {
  input.validate();
  FilteredComplex a = cap_with_cone(input);
  const std::size_t degrees = a.degrees();
  const std::size_t levels = a.levels() - 1;  // G_levels = 0

  auto lower = [&](std::size_t p, std::size_t n) {
    return n == 0 ? Subspace::zero(0) : a.step(p, n - 1);
  };
  auto boundaries = [&](std::size_t p, std::size_t n) {
    return n + 1 < degrees ? image_of(a.d[n + 1], a.step(p, n + 1)) : Subspace::zero(a.dims[n]);
  };

  std::map<Key, Subquotient> h, q;
  Layout dl, el;
  for (std::size_t p = 0; p < levels; ++p) {
    for (std::size_t n = 0; n < degrees; ++n) {
      const Subspace fp = a.step(p, n);
      const Subspace cycles = intersection(fp, nullspace_basis(a.d[n]));
      h.emplace(Key{p, n}, make_subquotient(cycles, boundaries(p, n)));
      const Subspace rel_cycles = intersection(fp, preimage_of(a.d[n], lower(p + 1, n)));
      q.emplace(Key{p, n}, make_subquotient(rel_cycles, sum(boundaries(p, n), a.step(p + 1, n))));
      dl.add(p, n, h.at({p, n}).dim());
      el.add(p, n, q.at({p, n}).dim());
    }
  }

  Matrix alpha(dl.total, dl.total), beta(el.total, dl.total), gamma(dl.total, el.total);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (std::size_t p = 0; p < levels; ++p) {
    for (std::size_t n = 0; n < degrees; ++n) {
      const Subquotient& hp = h.at({p, n});
      const Subquotient& ep = q.at({p, n});
      if (p + 1 < levels) place(alpha, dl.at(p, n), dl.at(p + 1, n), hp.classes(h.at({p + 1, n}).representatives));
      place(beta, el.at(p, n), dl.at(p, n), ep.classes(hp.representatives));
      if (n == 0 || ep.dim() == 0) continue;
      const Matrix image = a.d[n] * ep.representatives;
      // Second lift: shift every representative by a random element of the bottom.
      Matrix shift(ep.bottom.dim(), ep.dim());
      for (std::size_t r = 0; r < shift.rows(); ++r)
        for (std::size_t c = 0; c < shift.cols(); ++c) shift(r, c) = coeff(rng);
      const Matrix other = a.d[n] * (ep.representatives + ep.bottom.basis() * shift);
      if (p + 1 < levels) {
        const Subquotient& target = h.at({p + 1, n - 1});
        const Matrix g = target.classes(image);
        if (g != target.classes(other)) throw ComplexError("connecting map depends on the chosen lift");
        place(gamma, dl.at(p + 1, n - 1), el.at(p, n), g);
      } else if (!image.is_zero() || !other.is_zero()) {
        throw ComplexError("boundary of a bottom-level class is not zero");
      }
    }
  }

  VectCategory cat;
  const VectObject d{dl.total}, e{el.total};
  MasseyCouple out{std::move(a), {}, std::move(dl.blocks), std::move(el.blocks)};
  out.couple = make_couple(cat, VectMorphism{d, d, std::move(alpha)}, VectMorphism{d, e, std::move(beta)},
                           VectMorphism{e, d, std::move(gamma)});
  return out;
}

}  // namespace couples
