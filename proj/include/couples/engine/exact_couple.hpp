#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>

#include "couples/category/constructions.hpp"

namespace couples {

/// alpha : D -> D, beta : D -> E, gamma : E -> D with
/// im alpha = ker beta, im beta = ker gamma, im gamma = ker alpha.
template <class Obj>
struct ExactCouple {
  Obj D;
  Obj E;
  Arrow<Obj> alpha;
  Arrow<Obj> beta;
  Arrow<Obj> gamma;
};

template <class Obj>
struct EqualityCheck {
  std::string name;
  bool holds = false;
  /// Mediating iso between the two sides when they agree.
  std::optional<Arrow<Obj>> witness;
  std::string detail;
};

template <class Obj>
struct CoupleValidation {
  /// im alpha = ker beta, im beta = ker gamma, im gamma = ker alpha.
  std::array<EqualityCheck<Obj>, 3> subobjects;
  /// cok alpha = coim beta, cok beta = coim gamma, cok gamma = coim alpha.
  std::array<EqualityCheck<Obj>, 3> quotients;

  bool valid() const {
    for (const auto& c : subobjects) {
      if (!c.holds) return false;
    }
    return true;
  }
  /// Each subobject equality agrees with its quotient counterpart.
  bool equivalence_consistent() const {
    for (std::size_t i = 0; i < 3; ++i) {
      if (subobjects[i].holds != quotients[i].holds) return false;
    }
    return true;
  }
  std::string summary() const {
    std::ostringstream os;
    for (const auto& c : subobjects) os << c.name << ": " << (c.holds ? "holds" : "FAILS") << '\n';
    for (const auto& c : quotients) os << c.name << ": " << (c.holds ? "holds" : "FAILS") << '\n';
    return os.str();
  }
};

class CoupleViolation : public CategoryError {
 public:
  using CategoryError::CategoryError;
};

namespace detail {

template <LinearCategory C>
EqualityCheck<ObjectOf<C>> compare_subobjects(const C& cat, std::string name,
                                              const MorphismOf<C>& m1, const MorphismOf<C>& m2) {
  EqualityCheck<ObjectOf<C>> out{std::move(name), false, std::nullopt, {}};
  out.witness = subobject_equal(cat, m1, m2);
  out.holds = out.witness.has_value();
  if (!out.holds) {
    out.detail = "subobjects " + to_string(m1.matrix) + " and " + to_string(m2.matrix) + " differ";
  }
  return out;
}

template <LinearCategory C>
EqualityCheck<ObjectOf<C>> compare_quotients(const C& cat, std::string name,
                                             const MorphismOf<C>& e1, const MorphismOf<C>& e2) {
  EqualityCheck<ObjectOf<C>> out{std::move(name), false, std::nullopt, {}};
  out.witness = quotient_equal(cat, e1, e2);
  out.holds = out.witness.has_value();
  if (!out.holds) {
    out.detail = "quotients " + to_string(e1.matrix) + " and " + to_string(e2.matrix) + " differ";
  }
  return out;
}

}  // namespace detail

/// Checks the three exactness equalities and, independently, their quotient forms.
template <LinearCategory C>
CoupleValidation<ObjectOf<C>> validate_couple(const C& cat, const MorphismOf<C>& alpha,
                                              const MorphismOf<C>& beta, const MorphismOf<C>& gamma) {
  const auto& d = alpha.source;
  if (!cat.same_object(alpha.target, d) || !cat.same_object(beta.source, d) ||
      !cat.same_object(gamma.target, d) || !cat.same_object(beta.target, gamma.source)) {
    throw CategoryError("couple shapes do not compose as D -> D -> E -> D");
  }
  CoupleValidation<ObjectOf<C>> out;
  out.subobjects[0] = detail::compare_subobjects(cat, "im alpha = ker beta", image(cat, alpha), cat.kernel(beta));
  out.subobjects[1] = detail::compare_subobjects(cat, "im beta = ker gamma", image(cat, beta), cat.kernel(gamma));
  out.subobjects[2] = detail::compare_subobjects(cat, "im gamma = ker alpha", image(cat, gamma), cat.kernel(alpha));
  out.quotients[0] = detail::compare_quotients(cat, "cok alpha = coim beta", cat.cokernel(alpha), coimage(cat, beta));
  out.quotients[1] = detail::compare_quotients(cat, "cok beta = coim gamma", cat.cokernel(beta), coimage(cat, gamma));
  out.quotients[2] = detail::compare_quotients(cat, "cok gamma = coim alpha", cat.cokernel(gamma), coimage(cat, alpha));
  return out;
}

/// Validated construction; throws CoupleViolation listing the failing equalities.
template <LinearCategory C>
ExactCouple<ObjectOf<C>> make_couple(const C& cat, MorphismOf<C> alpha, MorphismOf<C> beta,
                                     MorphismOf<C> gamma) {
  const auto report = validate_couple(cat, alpha, beta, gamma);
  if (!report.valid()) {
    std::string what = "not an exact couple:";
    for (const auto& c : report.subobjects) {
      if (!c.holds) what += " [" + c.name + ": " + c.detail + "]";
    }
    throw CoupleViolation(what);
  }
  ObjectOf<C> d = alpha.source;
  ObjectOf<C> e = beta.target;
  return {std::move(d), std::move(e), std::move(alpha), std::move(beta), std::move(gamma)};
}

/// partial = beta o gamma : E -> E
template <LinearCategory C>
MorphismOf<C> differential(const C& cat, const ExactCouple<ObjectOf<C>>& c) {
  return compose(cat, c.beta, c.gamma);
}

}  // namespace couples
