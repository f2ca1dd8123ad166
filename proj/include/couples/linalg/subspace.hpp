#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "couples/linalg/matrix.hpp"

namespace couples {

/**
 * A linear subspace of Q^n, stored by a basis in reduced column echelon form.
 *
 * The basis column j has a leading 1 in row pivot_rows()[j] and zeros in every
 * other pivot row. The form is unique, so two Subspace values describe the
 * same subspace iff they compare equal.
 */
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the columns of `generators`.
  static Subspace span(const Matrix& generators);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

  bool contains(std::span<const Rational> vector) const;
  /// True when `other` is a subspace of this one.
  bool contains(const Subspace& other) const;
  /// Coordinates of a member vector in basis(); nullopt if not a member.
  std::optional<std::vector<Rational>> coordinates(std::span<const Rational> vector) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersection(const Subspace& u, const Subspace& v);
/// m(s) for m : Q^ambient -> Q^k.
Subspace image_of(const Matrix& m, const Subspace& s);
/// m^{-1}(s) = {x : m x in s}.
Subspace preimage_of(const Matrix& m, const Subspace& s);

struct SubspaceComparison {
  bool equal;
  Subspace sum;
  Subspace intersection;
  bool contains;  // u contains v
};

/// Lattice data for a pair of subspaces of the same ambient space.
SubspaceComparison compare(const Subspace& u, const Subspace& v);

/**
 * Standard basis vectors e_i for the rows i that are not pivots of `s`.
 * Together with s.basis() they form a basis of the ambient space.
 */
std::vector<std::size_t> complement_coordinates(const Subspace& s);

/**
 * The projection Q^n -> Q^n / s, realized on the complement coordinates:
 * row k reads the component along e_{complement_coordinates(s)[k]} in the
 * decomposition Q^n = s (+) span{e_i}.
 */
Matrix quotient_projection(const Subspace& s);

}  // namespace couples
