#include "couples/gen/lemma_suite.hpp"

#include <random>

#include "couples/category/constructions.hpp"

namespace couples {

const char* to_string(LemmaKind k) {
  switch (k) {
    case LemmaKind::first: return "first";
    case LemmaKind::second: return "second";
    case LemmaKind::pushout_strict: return "pushout_strict";
  }
  return "?";
}

std::optional<LemmaKind> parse_lemma_kind(const std::string& name) {
  if (name == "first") return LemmaKind::first;
  if (name == "second") return LemmaKind::second;
  if (name == "pushout_strict") return LemmaKind::pushout_strict;
  return std::nullopt;
}

namespace {

constexpr std::size_t kMaxDiscards = 20;

// An object with the same space and weaker filtration, so that the identity
// into it is a morphism that is usually not strict.
VectObject coarsen(const VectCategory&, const VectObject& x) { return x; }

FiltObject coarsen(const FiltCategory&, const FiltObject& x) {
  std::vector<Subspace> steps{Subspace::full(x.dim())};
  for (const auto& s : x.steps()) steps.push_back(s);
  return FiltObject(x.dim(), std::move(steps));
}

// (id, h) : Q -> Q' (+) Z, a monic; strict when Q' = Q.
template <LinearCategory C>
MorphismOf<C> graph_monic(const C& cat, std::mt19937_64& rng, const ObjectOf<C>& q, bool weaken) {
  const auto z = cat.random_object(rng, 2);
  const auto h = cat.random_morphism(rng, q, z);
  const auto target = cat.direct_sum(weaken ? coarsen(cat, q) : q, z).object;
  return make_morphism(cat, q, target, vstack(Matrix::identity(cat.dim(q)), h.matrix));
}

std::string describe(const char* name, const Matrix& m) { return std::string(name) + " = " + to_string(m); }

template <LinearCategory C>
class Suite {
 public:
  Suite(const C& cat, std::uint64_t seed) : cat_(cat), rng_(seed) {}

  // Returns an empty string when the conclusion holds, nullopt to discard.
  std::optional<std::string> first(LemmaReport& report) {
    const auto x = cat_.random_object(rng_, 3);
    const auto y = cat_.random_object(rng_, 4);
    const auto beta = cat_.random_morphism(rng_, x, y);
    const auto alpha = cat_.cokernel(beta);
    MorphismOf<C> rho = identity(cat_, alpha.target);
    const int variant = std::uniform_int_distribution<int>(0, 9)(rng_);
    if (variant >= 1 && variant <= 6) {
      rho = graph_monic(cat_, rng_, alpha.target, variant >= 4);
    } else if (variant > 6) {
      rho = cat_.random_morphism(rng_, alpha.target, cat_.random_object(rng_, 4));
    }
    if (!quotient_equal(cat_, cat_.cokernel(beta), alpha)) return std::nullopt;
    if (!subobject_equal(cat_, image(cat_, beta), cat_.kernel(compose(cat_, rho, alpha)))) return std::nullopt;
    ++report.hypotheses_verified;
    if (is_monic(cat_, rho)) return std::string();
    return describe("beta", beta.matrix) + ", " + describe("rho", rho.matrix) + ": rho is not monic";
  }

  std::optional<std::string> second(LemmaReport& report) {
    const auto y = cat_.random_object(rng_, 4);
    const auto g = cat_.random_morphism(rng_, y, cat_.random_object(rng_, 3));
    const auto rho = cat_.kernel(g);
    const auto x = cat_.random_object(rng_, 3);
    const auto beta = cat_.random_morphism(rng_, x, rho.source);
    const auto c = cat_.cokernel(compose(cat_, rho, beta));
    const bool weaken = std::bernoulli_distribution(0.5)(rng_);
    const auto alpha = compose(cat_, graph_monic(cat_, rng_, c.target, weaken), c);
    if (!is_kernel(cat_, rho)) return std::nullopt;
    if (!quotient_equal(cat_, coimage(cat_, alpha), c)) return std::nullopt;
    ++report.hypotheses_verified;
    if (subobject_equal(cat_, image(cat_, beta), cat_.kernel(compose(cat_, alpha, rho)))) return std::string();
    return describe("rho", rho.matrix) + ", " + describe("beta", beta.matrix) + ", " +
           describe("alpha", alpha.matrix) + ": im beta != ker(alpha rho)";
  }

  std::optional<std::string> pushout_strict(LemmaReport& report) {
    const auto z = cat_.random_object(rng_, 4);
    const auto h = cat_.random_morphism(rng_, cat_.random_object(rng_, 2), z);
    const auto sigma = cat_.cokernel(h);
    const auto rho = graph_monic(cat_, rng_, sigma.target, false);
    const auto x = compose(cat_, rho, sigma);
    const auto s = cat_.random_morphism(rng_, z, cat_.random_object(rng_, 4));
    if (!is_strict(cat_, x).strict) return std::nullopt;
    const auto im_x = image(cat_, x);
    if (!is_kernel(cat_, im_x) || !is_semistable_kernel(cat_, im_x).holds()) return std::nullopt;
    ++report.hypotheses_verified;
    const auto y = pushout(cat_, x, s).q2;
    const auto cert = is_strict(cat_, y);
    std::string problem;
    if (!cert.strict) {
      problem = "y is not strict (" + cert.reason + ")";
    } else {
      const auto im_y = image(cat_, y);
      if (!is_kernel(cat_, im_y)) {
        problem = "im y is not a kernel";
      } else if (const auto v = is_semistable_kernel(cat_, im_y); !v.holds()) {
        problem = "im y is not semistable: " + v.witness;
      }
    }
    if (problem.empty()) return problem;
    return describe("x", x.matrix) + ", " + describe("s", s.matrix) + ", " + describe("y", y.matrix) + ": " +
           problem;
  }

 private:
  const C& cat_;
  std::mt19937_64 rng_;
};

template <LinearCategory C>
LemmaReport run(const C& cat, LemmaKind kind, std::size_t trials, std::uint64_t seed) {
  LemmaReport report;
  report.kind = kind;
  report.trials = trials;
  Suite<C> suite(cat, seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::optional<std::string> result;
    std::size_t discards = 0;
    while (!result) {
      switch (kind) {
        case LemmaKind::first: result = suite.first(report); break;
        case LemmaKind::second: result = suite.second(report); break;
        case LemmaKind::pushout_strict: result = suite.pushout_strict(report); break;
      }
      if (!result) {
        ++report.discarded;
        if (++discards > kMaxDiscards) {
          report.failures.push_back("trial " + std::to_string(t) + ": no instance satisfying the hypotheses after " +
                                    std::to_string(kMaxDiscards) + " draws");
          break;
        }
      }
    }
    if (!result) continue;
    if (result->empty()) {
      ++report.conclusions_held;
    } else {
      report.failures.push_back("trial " + std::to_string(t) + ": " + *result);
    }
  }
  return report;
}

}  // namespace

LemmaReport run_lemma_suite(const VectCategory& cat, LemmaKind kind, std::size_t trials, std::uint64_t seed) {
  return run(cat, kind, trials, seed);
}

LemmaReport run_lemma_suite(const FiltCategory& cat, LemmaKind kind, std::size_t trials, std::uint64_t seed) {
  return run(cat, kind, trials, seed);
}

}  // namespace couples
