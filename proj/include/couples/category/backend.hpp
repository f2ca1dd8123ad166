#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "couples/category/arrow.hpp"

namespace couples {

/**
 * Capability contract for a preabelian category realized by matrices over Q.
 *
 * Hom(X, Y) must be a linear subspace of the (dim Y x dim X) matrices; the
 * backend reports membership through violation() and spans it with
 * hom_basis(). kernel() and cokernel() must return the universal arrows;
 * everything else (images, pullbacks, mediation, strictness) is generic.
 *
 * Flags:
 *   kAbelian       every morphism is strict.
 *   kQuasiAbelian  kernels are stable under pushout, cokernels under pullback.
 *   kFullHom       every matrix of the right shape is a morphism.
 */
template <class C>
concept LinearCategory = requires(const C& cat, const typename C::Object& x,
                                  const typename C::Morphism& f, const Matrix& m,
                                  std::mt19937_64& rng, std::size_t n) {
  requires std::same_as<typename C::Morphism, Arrow<typename C::Object>>;
  { C::kName } -> std::convertible_to<std::string_view>;
  { C::kAbelian } -> std::convertible_to<bool>;
  { C::kQuasiAbelian } -> std::convertible_to<bool>;
  { C::kFullHom } -> std::convertible_to<bool>;
  { cat.dim(x) } -> std::same_as<std::size_t>;
  { cat.same_object(x, x) } -> std::same_as<bool>;
  { cat.zero_object() } -> std::same_as<typename C::Object>;
  { cat.violation(x, x, m) } -> std::same_as<std::optional<std::size_t>>;
  { cat.kernel(f) } -> std::same_as<typename C::Morphism>;
  { cat.cokernel(f) } -> std::same_as<typename C::Morphism>;
  { cat.direct_sum(x, x) } -> std::same_as<Biproduct<typename C::Object>>;
  { cat.hom_basis(x, x) } -> std::same_as<std::vector<Matrix>>;
  { cat.random_object(rng, n) } -> std::same_as<typename C::Object>;
  { cat.random_morphism(rng, x, x) } -> std::same_as<typename C::Morphism>;
};

}  // namespace couples
