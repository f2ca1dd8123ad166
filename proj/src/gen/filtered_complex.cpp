#include "couples/gen/filtered_complex.hpp"

#include <numeric>
#include <optional>

#include "couples/linalg/echelon.hpp"
#include "couples/vect/vect_category.hpp"

namespace couples {

std::size_t FilteredComplex::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

Matrix FilteredComplex::boundary(std::size_t n) const {
  if (n < d.size()) return d[n];
  return Matrix(n - 1 < dims.size() ? dims[n - 1] : 0, 0);
}

Subspace FilteredComplex::step(std::size_t p, std::size_t n) const {
  if (p < filtration.size()) return filtration[p][n];
  return Subspace::zero(dims[n]);
}

void FilteredComplex::validate() const {
  const std::size_t count = dims.size();
  if (d.size() != count) throw ComplexError("one differential per degree is required");
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t below = n == 0 ? 0 : dims[n - 1];
    if (d[n].rows() != below || d[n].cols() != dims[n]) {
      throw ComplexError("d_" + std::to_string(n) + " has the wrong shape");
    }
    if (n >= 1 && !(d[n - 1] * d[n]).is_zero()) throw ComplexError("d o d != 0 in degree " + std::to_string(n));
  }
  if (filtration.size() < 2) throw ComplexError("a filtration needs at least two steps");
  for (std::size_t p = 0; p < filtration.size(); ++p) {
    if (filtration[p].size() != count) throw ComplexError("filtration step has the wrong number of degrees");
    for (std::size_t n = 0; n < count; ++n) {
      const Subspace& s = filtration[p][n];
      if (s.ambient_dim() != dims[n]) throw ComplexError("filtration step has the wrong ambient dimension");
      if (p == 0 && s.dim() != dims[n]) throw ComplexError("F_0 must be the whole complex");
      if (p + 1 == filtration.size() && s.dim() != 0) throw ComplexError("the last filtration step must be 0");
      if (p > 0 && !filtration[p - 1][n].contains(s)) throw ComplexError("filtration is not decreasing");
      if (n >= 1 && !filtration[p][n - 1].contains(image_of(d[n], s))) {
        throw ComplexError("F_" + std::to_string(p) + " is not a subcomplex in degree " + std::to_string(n));
      }
    }
  }
}

FilteredComplex trivially_filtered(std::vector<std::size_t> dims, std::vector<Matrix> d) {
  FilteredComplex fc{std::move(dims), std::move(d), {}};
  std::vector<Subspace> full, zero;
  for (auto n : fc.dims) {
    full.push_back(Subspace::full(n));
    zero.push_back(Subspace::zero(n));
  }
  fc.filtration = {full, zero};
  fc.validate();
  return fc;
}

FilteredComplex cap_with_cone(const FilteredComplex& fc) {
  const std::size_t count = fc.degrees();
  auto dim_c = [&](std::size_t n) -> std::size_t { return n < count ? fc.dims[n] : 0; };
  auto d_c = [&](std::size_t n) -> Matrix {
    // d_n : C_n -> C_{n-1}, zero shapes outside the range.
    const std::size_t rows = n == 0 ? 0 : dim_c(n - 1);
    if (n < count) return fc.d[n];
    return Matrix(rows, dim_c(n));
  };
  FilteredComplex out;
  for (std::size_t n = 0; n <= count; ++n) out.dims.push_back((n == 0 ? 0 : dim_c(n - 1)) + dim_c(n));
  for (std::size_t n = 0; n <= count; ++n) {
    const std::size_t a_src = n == 0 ? 0 : dim_c(n - 1);
    const std::size_t b_src = dim_c(n);
    const std::size_t a_tgt = n < 2 ? 0 : dim_c(n - 2);
    const std::size_t b_tgt = n == 0 ? 0 : dim_c(n - 1);
    Matrix m(a_tgt + b_tgt, a_src + b_src);
    if (n >= 1) {
      const Matrix da = d_c(n - 1);  // C_{n-1} -> C_{n-2}
      for (std::size_t r = 0; r < a_tgt; ++r)
        for (std::size_t c = 0; c < a_src; ++c) m(r, c) = -da(r, c);
      for (std::size_t i = 0; i < b_tgt; ++i) m(a_tgt + i, i) = 1;
      const Matrix db = d_c(n);
      for (std::size_t r = 0; r < b_tgt; ++r)
        for (std::size_t c = 0; c < b_src; ++c) m(a_tgt + r, a_src + c) = db(r, c);
    }
    out.d.push_back(std::move(m));
  }
  std::vector<Subspace> top;
  for (auto n : out.dims) top.push_back(Subspace::full(n));
  out.filtration.push_back(std::move(top));
  for (std::size_t p = 0; p < fc.levels(); ++p) {
    std::vector<Subspace> level;
    for (std::size_t n = 0; n <= count; ++n) {
      const std::size_t offset = n == 0 ? 0 : dim_c(n - 1);
      const Subspace s = n < count ? fc.filtration[p][n] : Subspace::zero(0);
      Matrix emb(out.dims[n], s.dim());
      for (std::size_t r = 0; r < s.ambient_dim(); ++r)
        for (std::size_t c = 0; c < s.dim(); ++c) emb(offset + r, c) = s.basis()(r, c);
      level.push_back(Subspace::span(emb));
    }
    out.filtration.push_back(std::move(level));
  }
  out.validate();
  return out;
}

FilteredComplex random_filtered_complex(std::mt19937_64& rng, const RandomComplexOptions& opts) {
  if (opts.degrees == 0 || opts.levels == 0) throw ComplexError("need at least one degree and one level");
  struct Generator {
    std::size_t level;
    std::optional<std::size_t> boundary;  // index of d(x) in degree n-1
  };
  std::vector<std::vector<Generator>> gens(opts.degrees);
  std::uniform_int_distribution<std::size_t> level_dist(0, opts.levels - 1);
  std::uniform_int_distribution<std::size_t> degree_dist(0, opts.degrees - 1);
  std::uniform_int_distribution<std::size_t> target_dist(std::min<std::size_t>(4, opts.max_total_dim),
                                                         opts.max_total_dim);
  std::bernoulli_distribution interval(opts.zero_differential ? 0.0 : 0.6);
  const std::size_t target = target_dist(rng);
  std::size_t total = 0;
  while (total < target) {
    if (opts.degrees >= 2 && total + 2 <= opts.max_total_dim && interval(rng)) {
      const std::size_t n = 1 + std::uniform_int_distribution<std::size_t>(0, opts.degrees - 2)(rng);
      const std::size_t lx = level_dist(rng);
      const std::size_t ly = std::uniform_int_distribution<std::size_t>(lx, opts.levels - 1)(rng);
      gens[n - 1].push_back({ly, std::nullopt});
      gens[n].push_back({lx, gens[n - 1].size() - 1});
      total += 2;
    } else {
      gens[degree_dist(rng)].push_back({level_dist(rng), std::nullopt});
      total += 1;
    }
  }

  FilteredComplex fc;
  for (const auto& g : gens) fc.dims.push_back(g.size());
  std::vector<Matrix> change;
  std::vector<Matrix> change_inv;
  for (auto n : fc.dims) {
    change.push_back(random_invertible(rng, n));
    change_inv.push_back(*inverse(change.back()));
  }
  for (std::size_t n = 0; n < opts.degrees; ++n) {
    Matrix m(n == 0 ? 0 : fc.dims[n - 1], fc.dims[n]);
    for (std::size_t i = 0; i < gens[n].size(); ++i) {
      if (gens[n][i].boundary) m(*gens[n][i].boundary, i) = 1;
    }
    if (n >= 1) m = change[n - 1] * m * change_inv[n];
    fc.d.push_back(std::move(m));
  }
  for (std::size_t p = 0; p <= opts.levels; ++p) {
    std::vector<Subspace> level;
    for (std::size_t n = 0; n < opts.degrees; ++n) {
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < gens[n].size(); ++i) {
        if (gens[n][i].level >= p) cols.push_back(i);
      }
      level.push_back(Subspace::span(change[n].select_columns(cols)));
    }
    fc.filtration.push_back(std::move(level));
  }
  fc.validate();
  return fc;
}

}  // namespace couples
