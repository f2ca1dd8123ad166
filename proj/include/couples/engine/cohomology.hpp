#pragma once

#include <optional>
#include <string>
#include <vector>

#include "couples/engine/derive.hpp"

namespace couples {

/**
 * Left and right cohomology of a differential object (E, ∂):
 *   H⁻ = Cok(θ : Im ∂ -> Ker ∂),   H⁺ = Ker(τ : Cok ∂ -> Coim ∂),
 * together with θ′ : E -> Ker ∂ and τ′ : Cok ∂ -> E, the factorizations of ∂
 * through ker ∂ and cok ∂.
 */
template <class Obj>
struct CohomologyData {
  Arrow<Obj> partial;
  Arrow<Obj> kerp;   // Ker ∂ -> E
  Arrow<Obj> cokp;   // E -> Cok ∂
  Arrow<Obj> im;     // Im ∂ -> E
  Arrow<Obj> coim;   // E -> Coim ∂
  Arrow<Obj> theta;    // Im ∂ -> Ker ∂
  Arrow<Obj> tau;      // Cok ∂ -> Coim ∂
  Arrow<Obj> theta_p;  // E -> Ker ∂
  Arrow<Obj> tau_p;    // Cok ∂ -> E
  Arrow<Obj> cok_theta;  // Ker ∂ -> H⁻
  Arrow<Obj> ker_tau;    // H⁺ -> Cok ∂
  Obj h_minus;
  Obj h_plus;
  /// cok θ = cok θ′ as quotients of Ker ∂.
  bool cok_theta_matches = false;
  /// ker τ = ker τ′ as subobjects of Cok ∂.
  bool ker_tau_matches = false;
};

template <LinearCategory C>
CohomologyData<ObjectOf<C>> cohomology(const C& cat, const MorphismOf<C>& partial) {
  if (!cat.same_object(partial.source, partial.target)) throw CategoryError("differential must be an endomorphism");
  if (!is_zero(cat, compose(cat, partial, partial))) throw CategoryError("not a differential");
  CohomologyData<ObjectOf<C>> h;
  h.partial = partial;
  h.kerp = cat.kernel(partial);
  h.cokp = cat.cokernel(partial);
  h.im = image(cat, partial);
  h.coim = coimage(cat, partial);
  h.theta = expect_unique(factor_through_mono(cat, h.kerp, h.im), "theta");
  h.tau = expect_unique(factor_through_epi(cat, h.cokp, h.coim), "tau");
  h.theta_p = expect_unique(factor_through_mono(cat, h.kerp, partial), "theta'");
  h.tau_p = expect_unique(factor_through_epi(cat, h.cokp, partial), "tau'");
  h.cok_theta = cat.cokernel(h.theta);
  h.ker_tau = cat.kernel(h.tau);
  h.h_minus = h.cok_theta.target;
  h.h_plus = h.ker_tau.source;
  h.cok_theta_matches = quotient_equal(cat, h.cok_theta, cat.cokernel(h.theta_p)).has_value();
  h.ker_tau_matches = subobject_equal(cat, h.ker_tau, cat.kernel(h.tau_p)).has_value();
  return h;
}

/// Isomorphisms tying the derived couples to the cohomology of ∂ = beta gamma.
template <class Obj>
struct CohomologyIdentification {
  /// u : E_rho -> Ker ∂ with (ker ∂) u = rho′
  std::optional<Arrow<Obj>> ker_iso;
  /// v : E^sigma -> Cok ∂ with v sigma″ = cok ∂
  std::optional<Arrow<Obj>> cok_iso;
  /// θ′ = u beta′ gamma
  bool theta_matches = false;
  /// τ′ v = beta gamma″
  bool tau_matches = false;
  /// w : E1⁻ -> H⁻ with w sigma′ = (cok θ) u
  std::optional<Arrow<Obj>> minus_iso;
  /// z : E1⁺ -> H⁺ with (ker τ) z = v rho″
  std::optional<Arrow<Obj>> plus_iso;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

template <LinearCategory C>
CohomologyIdentification<ObjectOf<C>> identify_cohomology(const C& cat, const ExactCouple<ObjectOf<C>>& c,
                                                        const DerivedCouple<ObjectOf<C>>& left,
                                                        const DerivedCouple<ObjectOf<C>>& right,
                                                        const CohomologyData<ObjectOf<C>>& h) {
  if (!left.left || !right.right) throw CategoryError("identify_cohomology: need a left and a right derived couple");
  const auto& ls = *left.left;
  const auto& rs = *right.right;
  CohomologyIdentification<ObjectOf<C>> out;

  out.ker_iso = subobject_equal(cat, ls.rho_p, h.kerp);
  if (!out.ker_iso) {
    out.failures.push_back("rho' is not a kernel of the differential");
  } else {
    const auto rhs = compose(cat, *out.ker_iso, ls.beta_p, c.gamma);
    out.theta_matches = equal(cat, h.theta_p, rhs);
    if (!out.theta_matches) {
      out.failures.push_back("theta' = beta' gamma fails: " + to_string(h.theta_p.matrix) + " vs " +
                             to_string(rhs.matrix));
    }
    const auto cok_theta_u = compose(cat, h.cok_theta, *out.ker_iso);
    out.minus_iso = quotient_equal(cat, ls.sigma_p, cok_theta_u);
    if (!out.minus_iso) out.failures.push_back("E1- is not isomorphic to H- over sigma'");
  }

  out.cok_iso = quotient_equal(cat, rs.sigma_pp, h.cokp);
  if (!out.cok_iso) {
    out.failures.push_back("sigma'' is not a cokernel of the differential");
  } else {
    const auto lhs = compose(cat, h.tau_p, *out.cok_iso);
    const auto rhs = compose(cat, c.beta, rs.gamma_pp);
    out.tau_matches = equal(cat, lhs, rhs);
    if (!out.tau_matches) {
      out.failures.push_back("tau' = beta gamma'' fails: " + to_string(lhs.matrix) + " vs " +
                             to_string(rhs.matrix));
    }
    const auto v_rho = compose(cat, *out.cok_iso, rs.rho_pp);
    auto z = subobject_equal(cat, v_rho, h.ker_tau);
    // subobject_equal gives ker_tau o z' = v_rho with z' : E1+ -> H+.
    out.plus_iso = std::move(z);
    if (!out.plus_iso) out.failures.push_back("E1+ is not isomorphic to H+ over rho''");
  }
  if (!h.cok_theta_matches) out.failures.push_back("cok theta != cok theta'");
  if (!h.ker_tau_matches) out.failures.push_back("ker tau != ker tau'");
  return out;
}

}  // namespace couples
