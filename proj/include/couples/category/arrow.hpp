#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "couples/linalg/matrix.hpp"

namespace couples {

/// Raised when a construction that must succeed in a preabelian backend does
/// not (a missing or non-unique factorization, a broken universal property).
class CategoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix that is not a morphism between the requested objects.
class NotAMorphism : public CategoryError {
 public:
  NotAMorphism(const std::string& what, std::optional<std::size_t> level)
      : CategoryError(what), level_(level) {}
  std::optional<std::size_t> level() const { return level_; }

 private:
  std::optional<std::size_t> level_;
};

/**
 * An arrow in a concrete Q-linear category: the underlying linear map is
 * `matrix` (target dim x source dim), and the backend decides which matrices
 * qualify as morphisms between `source` and `target`.
 */
template <class Obj>
struct Arrow {
  Obj source;
  Obj target;
  Matrix matrix;
};

template <class Obj>
struct Biproduct {
  Obj object;
  Arrow<Obj> inject_first;
  Arrow<Obj> inject_second;
  Arrow<Obj> project_first;
  Arrow<Obj> project_second;
};

}  // namespace couples
