#pragma once

#include <optional>
#include <string>

#include "couples/engine/cohomology.hpp"

namespace couples {

/// The comparison morphism omega : E1⁻ -> E1⁺ between the two derived couples.
template <class Obj>
struct OmegaData {
  std::optional<Arrow<Obj>> omega;
  std::size_t family_dim = 0;
  bool unique = false;
  bool monic = false;
  bool epic = false;
  bool iso = false;
  /// rho″ omega sigma′ = sigma″ rho′
  bool defining_equation = false;
  /// omega beta1⁻ = beta1⁺
  bool beta_equation = false;
  /// gamma1⁻ = gamma1⁺ omega
  bool gamma_equation = false;
  /// The unique m : H⁻ -> H⁺ with (ker τ) m (cok θ) = (cok ∂)(ker ∂).
  std::optional<Arrow<Obj>> m;
  /// m w = z omega for the identifications w, z of E1∓ with H∓.
  bool cohomology_equation = false;
  SemistabilityVerdict ker_partial;
  SemistabilityVerdict cok_partial;
  /// A certified verdict on either side forces omega to be an isomorphism.
  bool iso_required = false;

  bool ok() const {
    return unique && monic && epic && defining_equation && beta_equation && gamma_equation &&
           cohomology_equation && (!iso_required || iso);
  }
};

template <LinearCategory C>
OmegaData<ObjectOf<C>> omega(const C& cat, const DerivedCouple<ObjectOf<C>>& left,
                             const DerivedCouple<ObjectOf<C>>& right, const CohomologyData<ObjectOf<C>>& h,
                             const CohomologyIdentification<ObjectOf<C>>& ident,
                             const SemistabilityOptions& opts = {}) {
  if (!left.left || !right.right) throw CategoryError("omega: need a left and a right derived couple");
  const auto& ls = *left.left;
  const auto& rs = *right.right;
  const auto& e1m = left.couple.E;
  const auto& e1p = right.couple.E;
  OmegaData<ObjectOf<C>> out;

  const auto rhs = compose(cat, rs.sigma_pp, ls.rho_p);
  auto sol = solve_hom(cat, e1m, e1p, {HomEquation{rs.rho_pp.matrix, ls.sigma_p.matrix, rhs.matrix}});
  if (!sol.exists()) throw CategoryError("omega: rho'' omega sigma' = sigma'' rho' has no solution");
  out.family_dim = sol.family_dim;
  out.unique = sol.unique();
  if (!out.unique) {
    throw CategoryError("omega: solution family has dimension " + std::to_string(sol.family_dim));
  }
  const auto& w = *sol.morphism;
  out.omega = w;
  out.defining_equation = equal(cat, compose(cat, rs.rho_pp, w, ls.sigma_p), rhs);
  out.beta_equation = equal(cat, compose(cat, w, left.couple.beta), right.couple.beta);
  out.gamma_equation = equal(cat, left.couple.gamma, compose(cat, right.couple.gamma, w));
  out.monic = is_monic(cat, w);
  out.epic = is_epic(cat, w);
  out.iso = is_iso(cat, w);

  const auto target = compose(cat, h.cokp, h.kerp);
  auto m = solve_hom(cat, h.h_minus, h.h_plus,
                     {HomEquation{h.ker_tau.matrix, h.cok_theta.matrix, target.matrix}});
  if (m.unique()) {
    out.m = *m.morphism;
    if (ident.minus_iso && ident.plus_iso) {
      out.cohomology_equation =
          equal(cat, compose(cat, *out.m, *ident.minus_iso), compose(cat, *ident.plus_iso, w));
    }
  }

  out.ker_partial = is_semistable_kernel(cat, h.kerp, opts);
  out.cok_partial = is_semistable_cokernel(cat, h.cokp, opts);
  out.iso_required = out.ker_partial.verdict == Semistability::certified_true ||
                     out.cok_partial.verdict == Semistability::certified_true;
  if (out.iso_required && !out.iso) {
    throw CategoryError("omega is not an isomorphism although the differential is semistable");
  }
  return out;
}

/// Everything the two derivations of one couple produce.
template <class Obj>
struct DerivationData {
  DerivedCouple<Obj> left;
  DerivedCouple<Obj> right;
  CohomologyData<Obj> cohomology;
  CohomologyIdentification<Obj> identification;
  OmegaData<Obj> omega;
};

template <LinearCategory C>
DerivationData<ObjectOf<C>> derive_both(const C& cat, const ExactCouple<ObjectOf<C>>& c,
                                        const SemistabilityOptions& opts = {}) {
  const auto dec = decompose_strict_alpha(cat, c);
  auto l = derive(cat, c, dec, Side::left);
  auto r = derive(cat, c, dec, Side::right);
  auto h = cohomology(cat, differential(cat, c));
  auto ident = identify_cohomology(cat, c, l, r, h);
  auto om = omega(cat, l, r, h, ident, opts);
  return {std::move(l), std::move(r), std::move(h), std::move(ident), std::move(om)};
}

}  // namespace couples
