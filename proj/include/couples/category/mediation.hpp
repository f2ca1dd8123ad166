#pragma once

#include <optional>
#include <span>
#include <vector>

#include "couples/category/morphisms.hpp"
#include "couples/linalg/echelon.hpp"

namespace couples {

/// left * X * right = rhs; an absent factor stands for the identity.
struct HomEquation {
  std::optional<Matrix> left;
  std::optional<Matrix> right;
  Matrix rhs;
};

enum class MediationStatus { unique, none, multiple };

template <class Obj>
struct Mediation {
  MediationStatus status = MediationStatus::none;
  /// The unique solution, or one particular solution when status == multiple.
  std::optional<Arrow<Obj>> morphism;
  /// Dimension of the solution family inside Hom(source, target).
  std::size_t family_dim = 0;

  bool exists() const { return status != MediationStatus::none; }
  bool unique() const { return status == MediationStatus::unique; }
};

namespace detail {

struct MatrixSolution {
  bool consistent = false;
  Matrix particular;        // t x s
  std::size_t family_dim = 0;
};

inline bool injective(const Matrix& m) { return rank(m) == m.cols(); }
inline bool surjective(const Matrix& m) { return rank(m) == m.rows(); }

// X with L_i X = U_i for all i.
inline MatrixSolution solve_left_only(std::size_t t, std::size_t s,
                                      const std::vector<std::pair<Matrix, Matrix>>& eqs) {
  Matrix l(0, t), u(0, s);
  for (const auto& [li, ui] : eqs) {
    l = vstack(l, li);
    u = vstack(u, ui);
  }
  SolveResult r = solve(l, u);
  if (!r.consistent()) return {};
  return {true, std::move(r.particular), r.homogeneous.cols() * s};
}

// X with X R_i = V_i for all i.
inline MatrixSolution solve_right_only(std::size_t t, std::size_t s,
                                       const std::vector<std::pair<Matrix, Matrix>>& eqs) {
  Matrix r(s, 0), v(t, 0);
  for (const auto& [ri, vi] : eqs) {
    r = hstack(r, ri);
    v = hstack(v, vi);
  }
  SolveResult sol = solve(r.transpose(), v.transpose());
  if (!sol.consistent()) return {};
  return {true, sol.particular.transpose(), sol.homogeneous.cols() * t};
}

// Vectorized system: vec(L X R) = (R^T kron L) vec(X).
inline MatrixSolution solve_vectorized(std::size_t t, std::size_t s,
                                       std::span<const HomEquation> eqs) {
  Matrix a(0, t * s);
  Matrix b(0, 1);
  for (const auto& eq : eqs) {
    const Matrix l = eq.left ? *eq.left : Matrix::identity(t);
    const Matrix r = eq.right ? *eq.right : Matrix::identity(s);
    a = vstack(a, kronecker(r.transpose(), l));
    const auto v = vectorize(eq.rhs);
    b = vstack(b, Matrix(v.size(), 1, v));
  }
  SolveResult sol = solve(a, b);
  if (!sol.consistent()) return {};
  const auto col = sol.particular.column(0);
  return {true, unvectorize(col, t, s), sol.homogeneous.cols()};
}

inline void check_shapes(std::size_t t, std::size_t s, const HomEquation& eq) {
  const std::size_t rows = eq.left ? eq.left->rows() : t;
  const std::size_t cols = eq.right ? eq.right->cols() : s;
  if ((eq.left && eq.left->cols() != t) || (eq.right && eq.right->rows() != s) ||
      eq.rhs.rows() != rows || eq.rhs.cols() != cols) {
    throw DimensionError("hom equation shape mismatch");
  }
}

// Matrix-level solution, ignoring the Hom constraints of the backend.
inline MatrixSolution solve_matrix_level(std::size_t t, std::size_t s,
                                         std::span<const HomEquation> eqs) {
  bool any_left = false;
  bool any_right = false;
  for (const auto& eq : eqs) {
    check_shapes(t, s, eq);
    any_left = any_left || eq.left.has_value();
    any_right = any_right || eq.right.has_value();
  }
  if (!any_right) {
    std::vector<std::pair<Matrix, Matrix>> reduced;
    for (const auto& eq : eqs) reduced.emplace_back(eq.left ? *eq.left : Matrix::identity(t), eq.rhs);
    return solve_left_only(t, s, reduced);
  }
  if (!any_left) {
    std::vector<std::pair<Matrix, Matrix>> reduced;
    for (const auto& eq : eqs) reduced.emplace_back(eq.right ? *eq.right : Matrix::identity(s), eq.rhs);
    return solve_right_only(t, s, reduced);
  }
  // Two-sided: peel an injective left factor (L Y = C has at most one Y),
  // or a surjective right factor, and fall back to vectorization otherwise.
  bool lefts_injective = true;
  bool rights_surjective = true;
  for (const auto& eq : eqs) {
    if (eq.left && !injective(*eq.left)) lefts_injective = false;
    if (eq.right && !surjective(*eq.right)) rights_surjective = false;
  }
  if (lefts_injective) {
    std::vector<std::pair<Matrix, Matrix>> reduced;
    for (const auto& eq : eqs) {
      Matrix y = eq.rhs;
      if (eq.left) {
        SolveResult r = solve(*eq.left, eq.rhs);
        if (!r.consistent()) return {};
        y = std::move(r.particular);
      }
      reduced.emplace_back(eq.right ? *eq.right : Matrix::identity(s), std::move(y));
    }
    return solve_right_only(t, s, reduced);
  }
  if (rights_surjective) {
    std::vector<std::pair<Matrix, Matrix>> reduced;
    for (const auto& eq : eqs) {
      Matrix y = eq.rhs;
      if (eq.right) {
        SolveResult r = solve(eq.right->transpose(), eq.rhs.transpose());
        if (!r.consistent()) return {};
        y = r.particular.transpose();
      }
      reduced.emplace_back(eq.left ? *eq.left : Matrix::identity(t), std::move(y));
    }
    return solve_left_only(t, s, reduced);
  }
  return solve_vectorized(t, s, eqs);
}

}  // namespace detail

/**
 * Solves a system of linear equations for a morphism X : source -> target.
 *
 * The solution family is computed inside Hom(source, target), so a matrix
 * solution that violates the backend's constraints does not count.
 */
template <LinearCategory C>
Mediation<ObjectOf<C>> solve_hom(const C& cat, const ObjectOf<C>& source,
                                 const ObjectOf<C>& target, std::span<const HomEquation> eqs) {
  const std::size_t t = cat.dim(target);
  const std::size_t s = cat.dim(source);
  Mediation<ObjectOf<C>> out;
  detail::MatrixSolution m = detail::solve_matrix_level(t, s, eqs);
  if (!m.consistent) return out;
  if (m.family_dim == 0) {
    if (cat.violation(source, target, m.particular)) return out;
    out.status = MediationStatus::unique;
    out.morphism = MorphismOf<C>{source, target, std::move(m.particular)};
    return out;
  }
  if constexpr (C::kFullHom) {
    out.status = MediationStatus::multiple;
    out.family_dim = m.family_dim;
    out.morphism = MorphismOf<C>{source, target, std::move(m.particular)};
    return out;
  } else {
    // Parametrize Hom by a basis and solve for the coefficients.
    const std::vector<Matrix> basis = cat.hom_basis(source, target);
    std::size_t total_rows = 0;
    for (const auto& eq : eqs) total_rows += eq.rhs.rows() * eq.rhs.cols();
    Matrix a(total_rows, basis.size());
    Matrix b(total_rows, 1);
    std::size_t offset = 0;
    for (const auto& eq : eqs) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        Matrix img = basis[j];
        if (eq.left) img = *eq.left * img;
        if (eq.right) img = img * *eq.right;
        const auto v = vectorize(img);
        for (std::size_t i = 0; i < v.size(); ++i) a(offset + i, j) = v[i];
      }
      const auto r = vectorize(eq.rhs);
      for (std::size_t i = 0; i < r.size(); ++i) b(offset + i, 0) = r[i];
      offset += r.size();
    }
    SolveResult sol = solve(a, b);
    if (!sol.consistent()) return out;
    Matrix x(t, s);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (sgn(sol.particular(j, 0)) != 0) x += sol.particular(j, 0) * basis[j];
    }
    out.family_dim = sol.homogeneous.cols();
    out.status = out.family_dim == 0 ? MediationStatus::unique : MediationStatus::multiple;
    out.morphism = MorphismOf<C>{source, target, std::move(x)};
    return out;
  }
}

template <LinearCategory C>
Mediation<ObjectOf<C>> solve_hom(const C& cat, const ObjectOf<C>& source,
                                 const ObjectOf<C>& target, std::initializer_list<HomEquation> eqs) {
  return solve_hom(cat, source, target, std::span<const HomEquation>(eqs.begin(), eqs.size()));
}

/// w with m o w = f.
template <LinearCategory C>
Mediation<ObjectOf<C>> factor_through_mono(const C& cat, const MorphismOf<C>& m,
                                           const MorphismOf<C>& f) {
  if (!cat.same_object(m.target, f.target)) throw CategoryError("factor_through_mono: targets differ");
  return solve_hom(cat, f.source, m.source, {HomEquation{m.matrix, std::nullopt, f.matrix}});
}

/// w with w o e = f.
template <LinearCategory C>
Mediation<ObjectOf<C>> factor_through_epi(const C& cat, const MorphismOf<C>& e,
                                          const MorphismOf<C>& f) {
  if (!cat.same_object(e.source, f.source)) throw CategoryError("factor_through_epi: sources differ");
  return solve_hom(cat, e.target, f.target, {HomEquation{std::nullopt, e.matrix, f.matrix}});
}

/// Returns the unique solution or throws; for factorizations a preabelian
/// backend guarantees.
template <class Obj>
Arrow<Obj> expect_unique(Mediation<Obj> m, const char* what) {
  if (m.status == MediationStatus::none) {
    throw CategoryError(std::string(what) + ": no mediating morphism");
  }
  if (m.status == MediationStatus::multiple) {
    throw CategoryError(std::string(what) + ": mediating morphism not unique (family dimension " +
                        std::to_string(m.family_dim) + ")");
  }
  return std::move(*m.morphism);
}

}  // namespace couples
