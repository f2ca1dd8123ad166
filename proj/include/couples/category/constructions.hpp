#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "couples/category/mediation.hpp"

namespace couples {

// ---------------------------------------------------------------------------
// Image, coimage and the canonical morphism between them.

/// im f = ker(cok f)
template <LinearCategory C>
MorphismOf<C> image(const C& cat, const MorphismOf<C>& f) {
  return cat.kernel(cat.cokernel(f));
}

/// coim f = cok(ker f)
template <LinearCategory C>
MorphismOf<C> coimage(const C& cat, const MorphismOf<C>& f) {
  return cat.cokernel(cat.kernel(f));
}

template <class Obj>
struct Factorization {
  Arrow<Obj> coim;  // source -> Coim f
  Arrow<Obj> bar;   // Coim f -> Im f
  Arrow<Obj> im;    // Im f -> target
};

/// f = im o bar o coim, with bar found by the mediation solver.
template <LinearCategory C>
Factorization<ObjectOf<C>> factorize(const C& cat, const MorphismOf<C>& f) {
  auto im = image(cat, f);
  auto coim = coimage(cat, f);
  auto bar = expect_unique(
      solve_hom(cat, coim.target, im.source, {HomEquation{im.matrix, coim.matrix, f.matrix}}),
      "canonical factorization");
  return {std::move(coim), std::move(bar), std::move(im)};
}

/// An isomorphism test that also returns the inverse.
template <LinearCategory C>
std::optional<MorphismOf<C>> inverse_of(const C& cat, const MorphismOf<C>& f) {
  const Matrix id_target = Matrix::identity(cat.dim(f.target));
  const Matrix id_source = Matrix::identity(cat.dim(f.source));
  auto m = solve_hom(cat, f.target, f.source,
                     {HomEquation{f.matrix, std::nullopt, id_target},
                      HomEquation{std::nullopt, f.matrix, id_source}});
  if (!m.unique()) return std::nullopt;
  return std::move(*m.morphism);
}

template <LinearCategory C>
bool is_iso(const C& cat, const MorphismOf<C>& f) {
  return inverse_of(cat, f).has_value();
}

template <class Obj>
struct StrictnessCertificate {
  bool strict = false;
  Factorization<Obj> factorization;
  /// bar^{-1} when strict.
  std::optional<Arrow<Obj>> inverse;
  /// Filtration level at which the linear inverse of bar leaves Hom.
  std::optional<std::size_t> level;
  std::string reason;
};

/// f is strict iff bar has a two-sided inverse in the category.
template <LinearCategory C>
StrictnessCertificate<ObjectOf<C>> is_strict(const C& cat, const MorphismOf<C>& f) {
  StrictnessCertificate<ObjectOf<C>> cert;
  cert.factorization = factorize(cat, f);
  const auto& bar = cert.factorization.bar;
  if (auto inv = inverse_of(cat, bar)) {
    cert.strict = true;
    cert.inverse = std::move(*inv);
    return cert;
  }
  if (auto linear = inverse(bar.matrix)) {
    cert.level = cat.violation(bar.target, bar.source, *linear);
    cert.reason = "the linear inverse of the coimage-image map is not a morphism";
    if (cert.level) cert.reason += " (fails at level " + std::to_string(*cert.level) + ")";
  } else {
    cert.reason = "the coimage-image map is not invertible as a linear map";
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Subobjects and quotients.

/// Iso u with m2 o u = m1 when the two monics define the same subobject.
template <LinearCategory C>
std::optional<MorphismOf<C>> subobject_equal(const C& cat, const MorphismOf<C>& m1,
                                             const MorphismOf<C>& m2) {
  if (!cat.same_object(m1.target, m2.target)) throw CategoryError("subobject_equal: different targets");
  if (!is_monic(cat, m1) || !is_monic(cat, m2)) throw CategoryError("subobject_equal: input is not monic");
  auto u = factor_through_mono(cat, m2, m1);
  if (!u.unique()) return std::nullopt;
  auto v = factor_through_mono(cat, m1, m2);
  if (!v.unique()) return std::nullopt;
  return std::move(*u.morphism);
}

/// Iso u with u o e1 = e2 when the two epics define the same quotient.
template <LinearCategory C>
std::optional<MorphismOf<C>> quotient_equal(const C& cat, const MorphismOf<C>& e1,
                                            const MorphismOf<C>& e2) {
  if (!cat.same_object(e1.source, e2.source)) throw CategoryError("quotient_equal: different sources");
  if (!is_epic(cat, e1) || !is_epic(cat, e2)) throw CategoryError("quotient_equal: input is not epic");
  auto u = factor_through_epi(cat, e1, e2);
  if (!u.unique()) return std::nullopt;
  auto v = factor_through_epi(cat, e2, e1);
  if (!v.unique()) return std::nullopt;
  return std::move(*u.morphism);
}

template <LinearCategory C>
bool is_kernel(const C& cat, const MorphismOf<C>& f) {
  return is_monic(cat, f) && subobject_equal(cat, f, image(cat, f)).has_value();
}

template <LinearCategory C>
bool is_cokernel(const C& cat, const MorphismOf<C>& f) {
  return is_epic(cat, f) && quotient_equal(cat, coimage(cat, f), f).has_value();
}

// ---------------------------------------------------------------------------
// Pullbacks and pushouts, built from the biproduct and (co)kernels.

template <class Obj>
struct PullbackSquare {
  Arrow<Obj> f;   // X -> Z
  Arrow<Obj> g;   // Y -> Z
  Obj object;     // P
  Arrow<Obj> p1;  // P -> X
  Arrow<Obj> p2;  // P -> Y
};

template <class Obj>
struct PushoutSquare {
  Arrow<Obj> f;   // Z -> X
  Arrow<Obj> g;   // Z -> Y
  Obj object;     // Q
  Arrow<Obj> q1;  // X -> Q
  Arrow<Obj> q2;  // Y -> Q
};

/// P = ker(f p1 - g p2) inside X (+) Y.
template <LinearCategory C>
PullbackSquare<ObjectOf<C>> pullback(const C& cat, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  if (!cat.same_object(f.target, g.target)) throw CategoryError("pullback: not a cospan");
  const auto sum = cat.direct_sum(f.source, g.source);
  const auto diff = subtract(cat, compose(cat, f, sum.project_first), compose(cat, g, sum.project_second));
  const auto k = cat.kernel(diff);
  return {f, g, k.source, compose(cat, sum.project_first, k), compose(cat, sum.project_second, k)};
}

/// Q = cok(i1 f - i2 g) out of X (+) Y.
template <LinearCategory C>
PushoutSquare<ObjectOf<C>> pushout(const C& cat, const MorphismOf<C>& f, const MorphismOf<C>& g) {
  if (!cat.same_object(f.source, g.source)) throw CategoryError("pushout: not a span");
  const auto sum = cat.direct_sum(f.target, g.target);
  const auto diff = subtract(cat, compose(cat, sum.inject_first, f), compose(cat, sum.inject_second, g));
  const auto c = cat.cokernel(diff);
  return {f, g, c.target, compose(cat, c, sum.inject_first), compose(cat, c, sum.inject_second)};
}

/// w with p1 w = u and p2 w = v. A non-commuting cone has no mediation.
template <LinearCategory C>
Mediation<ObjectOf<C>> mediate_pullback(const C& cat, const PullbackSquare<ObjectOf<C>>& pb,
                                        const MorphismOf<C>& u, const MorphismOf<C>& v) {
  if (!cat.same_object(u.source, v.source) || !cat.same_object(u.target, pb.p1.target) ||
      !cat.same_object(v.target, pb.p2.target)) {
    throw CategoryError("mediate_pullback: cone does not match the square");
  }
  return solve_hom(cat, u.source, pb.object,
                   {HomEquation{pb.p1.matrix, std::nullopt, u.matrix},
                    HomEquation{pb.p2.matrix, std::nullopt, v.matrix}});
}

/// w with w q1 = u and w q2 = v.
template <LinearCategory C>
Mediation<ObjectOf<C>> mediate_pushout(const C& cat, const PushoutSquare<ObjectOf<C>>& po,
                                       const MorphismOf<C>& u, const MorphismOf<C>& v) {
  if (!cat.same_object(u.target, v.target) || !cat.same_object(u.source, po.q1.source) ||
      !cat.same_object(v.source, po.q2.source)) {
    throw CategoryError("mediate_pushout: cocone does not match the square");
  }
  return solve_hom(cat, po.object, u.target,
                   {HomEquation{std::nullopt, po.q1.matrix, u.matrix},
                    HomEquation{std::nullopt, po.q2.matrix, v.matrix}});
}

// ---------------------------------------------------------------------------
// Semistability.

enum class Semistability { certified_true, probed_true, false_with_witness };

struct SemistabilityOptions {
  std::size_t probes = 100;
  std::uint64_t seed = 0;
  /// Run probes even when the backend certifies the property.
  bool force_probes = false;
  std::size_t probe_max_dim = 4;
};

struct SemistabilityVerdict {
  Semistability verdict = Semistability::certified_true;
  std::size_t probes_run = 0;
  std::string witness;

  bool holds() const { return verdict != Semistability::false_with_witness; }
};

inline const char* to_string(Semistability s) {
  switch (s) {
    case Semistability::certified_true: return "certified-true";
    case Semistability::probed_true: return "probed-true";
    case Semistability::false_with_witness: return "false-with-witness";
  }
  return "?";
}

/**
 * Semistability of a kernel. Quasiabelian backends certify it outright;
 * otherwise (or when forced) f is pushed out along random morphisms and each
 * pushout is checked to be a kernel.
 */
template <LinearCategory C>
SemistabilityVerdict is_semistable_kernel(const C& cat, const MorphismOf<C>& f,
                                          const SemistabilityOptions& opts = {}) {
  if (!is_kernel(cat, f)) throw CategoryError("is_semistable_kernel: not a kernel");
  if (C::kQuasiAbelian && !opts.force_probes) return {};
  std::mt19937_64 rng(opts.seed);
  SemistabilityVerdict out{Semistability::probed_true, 0, {}};
  for (std::size_t i = 0; i < opts.probes; ++i) {
    const auto y = cat.random_object(rng, opts.probe_max_dim);
    const auto s = cat.random_morphism(rng, f.source, y);
    const auto po = pushout(cat, f, s);
    ++out.probes_run;
    if (!is_kernel(cat, po.q2)) {
      out.verdict = Semistability::false_with_witness;
      out.witness = "pushout along " + to_string(s.matrix) + " gives " + to_string(po.q2.matrix) +
                    ", which is not a kernel";
      return out;
    }
  }
  return out;
}

/// Dual: pullbacks of the cokernel along random morphisms must be cokernels.
template <LinearCategory C>
SemistabilityVerdict is_semistable_cokernel(const C& cat, const MorphismOf<C>& f,
                                            const SemistabilityOptions& opts = {}) {
  if (!is_cokernel(cat, f)) throw CategoryError("is_semistable_cokernel: not a cokernel");
  if (C::kQuasiAbelian && !opts.force_probes) return {};
  std::mt19937_64 rng(opts.seed);
  SemistabilityVerdict out{Semistability::probed_true, 0, {}};
  for (std::size_t i = 0; i < opts.probes; ++i) {
    const auto y = cat.random_object(rng, opts.probe_max_dim);
    const auto s = cat.random_morphism(rng, y, f.target);
    const auto pb = pullback(cat, f, s);
    ++out.probes_run;
    if (!is_cokernel(cat, pb.p2)) {
      out.verdict = Semistability::false_with_witness;
      out.witness = "pullback along " + to_string(s.matrix) + " gives " + to_string(pb.p2.matrix) +
                    ", which is not a cokernel";
      return out;
    }
  }
  return out;
}

}  // namespace couples
