#pragma once

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "couples/linalg/subspace.hpp"

namespace couples {

class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A bounded chain complex C_0 <- C_1 <- ... <- C_{N-1} of Q-spaces with a
 * finite decreasing filtration by subcomplexes.
 *
 * d[n] : C_n -> C_{n-1} (d[0] has zero rows). filtration[p][n] is F_p C_n for
 * p = 0..k, with F_0 = C and F_k = 0.
 */
struct FilteredComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix> d;
  std::vector<std::vector<Subspace>> filtration;

  std::size_t degrees() const { return dims.size(); }
  std::size_t levels() const { return filtration.size(); }
  std::size_t total_dim() const;
  /// d_n, with the zero map out of (or into) a missing degree.
  Matrix boundary(std::size_t n) const;
  /// F_p C_n; zero beyond the last level.
  Subspace step(std::size_t p, std::size_t n) const;

  /// Throws ComplexError when d^2 != 0, F_p is not a subcomplex, or the
  /// filtration is not exhaustive, separated and decreasing.
  void validate() const;
};

/// Trivial filtration C ⊇ 0.
FilteredComplex trivially_filtered(std::vector<std::size_t> dims, std::vector<Matrix> d);

/**
 * F'_0 = Cone(id_C), F'_{p+1} = F_p, where Cone_n = C_{n-1} (+) C_n with
 * d(a, b) = (-da, a + db) and C sits inside as the pairs (0, b). The cone is
 * acyclic, so the Massey couple of the result is finite and exact.
 */
FilteredComplex cap_with_cone(const FilteredComplex& fc);

struct RandomComplexOptions {
  std::size_t max_total_dim = 12;
  std::size_t degrees = 3;
  /// Number of nonzero filtration steps; F_levels = 0.
  std::size_t levels = 3;
  /// Draw d = 0.
  bool zero_differential = false;
};

/**
 * Random filtered complex built as a sum of interval summands x -> y (with
 * level(y) >= level(x)) and single generators, then moved to a random basis in
 * every degree.
 */
FilteredComplex random_filtered_complex(std::mt19937_64& rng, const RandomComplexOptions& opts = {});

}  // namespace couples
