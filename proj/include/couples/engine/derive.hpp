#pragma once

#include <optional>
#include <string>

#include "couples/engine/exact_couple.hpp"

namespace couples {

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

class DeriveError : public CategoryError {
 public:
  using CategoryError::CategoryError;
};

/// alpha = rho o sigma with rho = im alpha (a kernel) and sigma = bar o coim alpha.
template <class Obj>
struct StrictDecomposition {
  Obj D1;
  Arrow<Obj> rho;    // D1 -> D
  Arrow<Obj> sigma;  // D -> D1
  /// Iso u with (ker beta) u = rho.
  Arrow<Obj> rho_as_ker_beta;
  /// Iso v with v (cok gamma) = sigma.
  Arrow<Obj> sigma_as_cok_gamma;
};

// Left construction: pullback of rho along gamma, then pushout of beta' along sigma.
template <class Obj>
struct LeftSteps {
  Obj E_rho;
  Arrow<Obj> rho_p;    // E_rho -> E
  Arrow<Obj> gamma_p;  // E_rho -> D1
  Arrow<Obj> beta_p;   // D -> E_rho
  Arrow<Obj> sigma_p;  // E_rho -> E1-
};

// Right construction: pushout of sigma along beta, then pullback of rho along gamma''.
template <class Obj>
struct RightSteps {
  Obj E_sigma;
  Arrow<Obj> sigma_pp;  // E -> E_sigma
  Arrow<Obj> beta_pp;   // D1 -> E_sigma
  Arrow<Obj> gamma_pp;  // E_sigma -> D
  Arrow<Obj> rho_pp;    // E1+ -> E_sigma
};

template <class Obj>
struct DerivedCouple {
  Side side = Side::left;
  StrictDecomposition<Obj> decomposition;
  /// (D1, E1, alpha1 = sigma rho, beta1, gamma1)
  ExactCouple<Obj> couple;
  CoupleValidation<Obj> validation;
  bool beta_strict = false;
  bool gamma_strict = false;
  std::optional<LeftSteps<Obj>> left;
  std::optional<RightSteps<Obj>> right;

  bool exact() const { return validation.valid(); }
};

namespace detail {

template <LinearCategory C>
void require_equal(const C& cat, const MorphismOf<C>& lhs, const MorphismOf<C>& rhs,
                   const char* identity) {
  if (!equal(cat, lhs, rhs)) {
    throw DeriveError(std::string("construction identity fails: ") + identity + " (" +
                      to_string(lhs.matrix) + " vs " + to_string(rhs.matrix) + ")");
  }
}

}  // namespace detail

template <LinearCategory C>
StrictDecomposition<ObjectOf<C>> decompose_strict_alpha(const C& cat, const ExactCouple<ObjectOf<C>>& c) {
  auto cert = is_strict(cat, c.alpha);
  if (!cert.strict) throw DeriveError("alpha not strict: " + cert.reason);
  auto& fac = cert.factorization;
  auto rho = fac.im;
  auto sigma = compose(cat, fac.bar, fac.coim);
  detail::require_equal(cat, compose(cat, rho, sigma), c.alpha, "rho sigma = alpha");
  auto as_ker = subobject_equal(cat, rho, cat.kernel(c.beta));
  if (!as_ker) throw DeriveError("rho is not a kernel of beta");
  auto as_cok = quotient_equal(cat, cat.cokernel(c.gamma), sigma);
  if (!as_cok) throw DeriveError("sigma is not a cokernel of gamma");
  ObjectOf<C> d1 = rho.source;
  return {std::move(d1), std::move(rho), std::move(sigma), std::move(*as_ker), std::move(*as_cok)};
}

template <LinearCategory C>
DerivedCouple<ObjectOf<C>> derive(const C& cat, const ExactCouple<ObjectOf<C>>& c,
                                  const StrictDecomposition<ObjectOf<C>>& dec, Side side) {
  using Obj = ObjectOf<C>;
  DerivedCouple<Obj> out;
  out.side = side;
  out.decomposition = dec;
  out.beta_strict = is_strict(cat, c.beta).strict;
  out.gamma_strict = is_strict(cat, c.gamma).strict;
  const auto& rho = dec.rho;
  const auto& sigma = dec.sigma;
  const auto alpha1 = compose(cat, sigma, rho);
  const auto zero_d_d1 = zero_morphism(cat, c.D, dec.D1);
  const auto zero_d1_d1 = zero_morphism(cat, dec.D1, dec.D1);

  Arrow<Obj> beta1, gamma1;
  if (side == Side::left) {
    const auto pb = pullback(cat, c.gamma, rho);
    LeftSteps<Obj> s;
    s.E_rho = pb.object;
    s.rho_p = pb.p1;
    s.gamma_p = pb.p2;
    s.beta_p = expect_unique(mediate_pullback(cat, pb, c.beta, zero_d_d1), "beta'");
    const auto po = pushout(cat, s.beta_p, sigma);
    s.sigma_p = po.q1;
    beta1 = po.q2;
    gamma1 = expect_unique(mediate_pushout(cat, po, s.gamma_p, zero_d1_d1), "gamma1-");

    detail::require_equal(cat, compose(cat, s.rho_p, s.beta_p), c.beta, "rho' beta' = beta");
    detail::require_equal(cat, compose(cat, s.gamma_p, s.beta_p), zero_d_d1, "gamma' beta' = 0");
    detail::require_equal(cat, compose(cat, c.gamma, s.rho_p), compose(cat, rho, s.gamma_p),
                          "gamma rho' = rho gamma'");
    detail::require_equal(cat, compose(cat, s.sigma_p, s.beta_p), compose(cat, beta1, sigma),
                          "sigma' beta' = beta1- sigma");
    detail::require_equal(cat, compose(cat, gamma1, s.sigma_p), s.gamma_p, "gamma1- sigma' = gamma'");
    detail::require_equal(cat, compose(cat, gamma1, beta1), zero_d1_d1, "gamma1- beta1- = 0");
    out.left = std::move(s);
  } else {
    const auto po = pushout(cat, c.beta, sigma);
    RightSteps<Obj> s;
    s.E_sigma = po.object;
    s.sigma_pp = po.q1;
    s.beta_pp = po.q2;
    s.gamma_pp = expect_unique(mediate_pushout(cat, po, c.gamma, zero_morphism(cat, dec.D1, c.D)), "gamma''");
    const auto pb = pullback(cat, s.gamma_pp, rho);
    s.rho_pp = pb.p1;
    gamma1 = pb.p2;
    beta1 = expect_unique(mediate_pullback(cat, pb, s.beta_pp, zero_d1_d1), "beta1+");

    detail::require_equal(cat, compose(cat, s.sigma_pp, c.beta), compose(cat, s.beta_pp, sigma),
                          "sigma'' beta = beta'' sigma");
    detail::require_equal(cat, compose(cat, s.gamma_pp, s.sigma_pp), c.gamma, "gamma'' sigma'' = gamma");
    detail::require_equal(cat, compose(cat, s.gamma_pp, s.beta_pp), zero_morphism(cat, dec.D1, c.D),
                          "gamma'' beta'' = 0");
    detail::require_equal(cat, compose(cat, s.gamma_pp, s.rho_pp), compose(cat, rho, gamma1),
                          "gamma'' rho'' = rho gamma1+");
    detail::require_equal(cat, compose(cat, s.rho_pp, beta1), s.beta_pp, "rho'' beta1+ = beta''");
    detail::require_equal(cat, compose(cat, gamma1, beta1), zero_d1_d1, "gamma1+ beta1+ = 0");
    out.right = std::move(s);
  }

  out.validation = validate_couple(cat, alpha1, beta1, gamma1);
  if (!out.validation.valid() && out.beta_strict && out.gamma_strict) {
    throw DeriveError("derived couple is not exact although alpha, beta, gamma are strict:\n" +
                      out.validation.summary());
  }
  Obj e1 = beta1.target;
  out.couple = {dec.D1, std::move(e1), alpha1, std::move(beta1), std::move(gamma1)};
  return out;
}

template <LinearCategory C>
DerivedCouple<ObjectOf<C>> derive(const C& cat, const ExactCouple<ObjectOf<C>>& c, Side side) {
  return derive(cat, c, decompose_strict_alpha(cat, c), side);
}

}  // namespace couples
