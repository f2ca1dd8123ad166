// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "couples/cli/commands.hpp"
#include "couples/engine/iterate.hpp"
#include "couples/engine/omega.hpp"
#include "couples/gen/decorate.hpp"
#include "couples/gen/lemma_suite.hpp"
#include "couples/gen/massey.hpp"
#include "couples/gen/random_couples.hpp"
#include "couples/io/document.hpp"
#include "oracles.hpp"

using namespace couples;

namespace {

const VectCategory vect;
const FiltCategory filt;
const std::filesystem::path kFixtures = COUPLES_FIXTURE_DIR;

struct Result {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

int failures = 0;

void report(int id, const std::string& name, Result r, double seconds) {
  std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " [" << r.detail << "; "
            << std::fixed;
  std::cout.precision(2);
  std::cout << seconds << " s]\n";
  for (const auto& p : r.problems) std::cout << "    " << p << '\n';
  if (!r.pass) ++failures;
}

void run(int id, const std::string& name, const std::function<Result()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.pass = false;
    r.problems.push_back(std::string("exception: ") + e.what());
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  report(id, name, std::move(r), elapsed.count());
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// The shared couple corpus for criteria 1-3.
struct Corpus {
  std::vector<ExactCouple<VectObject>> vect;
  std::vector<ExactCouple<FiltObject>> filt;
};

Corpus build_corpus() {
  Corpus c;
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) c.vect.push_back(random_massey_couple(rng).couple);
  for (int i = 0; i < 25; ++i) c.filt.push_back(decorate_trivial(random_massey_couple(rng).couple));
  for (int i = 0; i < 30; ++i) c.filt.push_back(random_graded_filt_couple(rng));
  c.filt.push_back(f1_couple());
  return c;
}

template <class Obj>
struct Derived {
  std::string label;
  DerivationData<Obj> data;
};

template <class Cat>
std::vector<Derived<ObjectOf<Cat>>> derive_all(const Cat& cat, const std::vector<ExactCouple<ObjectOf<Cat>>>& cs,
                                              const char* prefix) {
  std::vector<Derived<ObjectOf<Cat>>> out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    out.push_back({std::string(prefix) + " #" + std::to_string(i), derive_both(cat, cs[i])});
  }
  return out;
}

template <class Cat>
void check_exact(const Cat& cat, const std::vector<Derived<ObjectOf<Cat>>>& ds, Result& r) {
  for (const auto& d : ds) {
    for (const auto* side : {&d.data.left, &d.data.right}) {
      const auto& c = side->couple;
      const auto v = validate_couple(cat, c.alpha, c.beta, c.gamma);
      r.require(v.valid(), d.label + " " + to_string(side->side) + ": " + v.summary());
    }
  }
}

template <class Obj>
void check_identification(const std::vector<Derived<Obj>>& ds, Result& r) {
  for (const auto& d : ds) {
    const auto& id = d.data.identification;
    r.require(id.theta_matches, d.label + ": theta' != beta' gamma");
    r.require(id.tau_matches, d.label + ": tau' != beta gamma''");
    r.require(id.minus_iso.has_value(), d.label + ": no iso H- -> E1-");
    r.require(id.plus_iso.has_value(), d.label + ": no iso H+ -> E1+");
    r.require(id.ok(), d.label + ": " + (id.failures.empty() ? std::string() : id.failures[0]));
  }
}

template <class Obj>
void check_omega(const std::vector<Derived<Obj>>& ds, Result& r, std::size_t& isos) {
  for (const auto& d : ds) {
    const auto& o = d.data.omega;
    r.require(o.omega.has_value() && o.unique && o.family_dim == 0, d.label + ": omega not unique");
    r.require(o.defining_equation, d.label + ": rho'' omega sigma' != sigma'' rho'");
    r.require(o.beta_equation, d.label + ": omega beta1- != beta1+");
    r.require(o.gamma_equation, d.label + ": gamma1- != gamma1+ omega");
    r.require(o.cohomology_equation, d.label + ": (ker tau) omega (cok theta) != (cok d)(ker d)");
    r.require(o.monic && o.epic, d.label + ": omega not a bimorphism");
    const bool certified = o.ker_partial.verdict == Semistability::certified_true ||
                           o.cok_partial.verdict == Semistability::certified_true;
    r.require(!certified || o.iso, d.label + ": certified semistable but omega is not iso");
    if (o.iso) ++isos;
  }
}

std::size_t oracle_rank(const Matrix& m) { return oracle::rank(oracle::dense(m), m.cols()); }

template <class Cat>
ObjectOf<Cat> nonzero_object(const Cat& cat, std::mt19937_64& rng) {
  for (;;) {
    auto x = cat.random_object(rng, 3);
    if (cat.dim(x) > 0) return x;
  }
}

// Universal-property cones for one backend. Every trial is redrawn until its
// cone admits a non-commuting perturbation, so both halves are exercised.
template <class Cat>
Result cones(const Cat& cat, std::uint64_t seed) {
  Result r;
  std::mt19937_64 rng(seed);
  std::size_t commuting = 0, perturbed = 0, redrawn = 0;
  for (int i = 0; i < 500; ++i) {
    for (int draw = 0;; ++draw) {
      r.require(draw < 100, "could not draw a perturbable pullback cone");
      if (draw >= 100) break;
      const auto z = nonzero_object(cat, rng);
      const auto f = cat.random_morphism(rng, nonzero_object(cat, rng), z);
      const auto g = cat.random_morphism(rng, cat.random_object(rng, 3), z);
      const auto pb = pullback(cat, f, g);
      const auto w = cat.random_morphism(rng, nonzero_object(cat, rng), pb.object);
      const auto u = compose(cat, pb.p1, w), v = compose(cat, pb.p2, w);
      // u + e with f e != 0 breaks f u = g v.
      const auto e = cat.random_morphism(rng, u.source, f.source);
      if (is_zero(cat, compose(cat, f, e))) {
        ++redrawn;
        continue;
      }
      r.require(equal(cat, compose(cat, f, pb.p1), compose(cat, g, pb.p2)), "pullback square does not commute");
      const auto m = mediate_pullback(cat, pb, u, v);
      r.require(m.unique() && m.morphism && equal(cat, *m.morphism, w), "pullback mediation missing or not unique");
      r.require(!mediate_pullback(cat, pb, add(cat, u, e), v).exists(), "pullback mediation for a non-commuting cone");
      ++commuting;
      ++perturbed;
      break;
    }
    for (int draw = 0;; ++draw) {
      r.require(draw < 100, "could not draw a perturbable pushout cocone");
      if (draw >= 100) break;
      const auto a = nonzero_object(cat, rng);
      const auto h = cat.random_morphism(rng, a, nonzero_object(cat, rng));
      const auto k = cat.random_morphism(rng, a, cat.random_object(rng, 3));
      const auto po = pushout(cat, h, k);
      const auto t = cat.random_morphism(rng, po.object, nonzero_object(cat, rng));
      const auto x = compose(cat, t, po.q1), y = compose(cat, t, po.q2);
      // x + e with e h != 0 breaks x h = y k.
      const auto e = cat.random_morphism(rng, x.source, x.target);
      if (is_zero(cat, compose(cat, e, h))) {
        ++redrawn;
        continue;
      }
      r.require(equal(cat, compose(cat, po.q1, h), compose(cat, po.q2, k)), "pushout square does not commute");
      const auto n = mediate_pushout(cat, po, x, y);
      r.require(n.unique() && n.morphism && equal(cat, *n.morphism, t), "pushout mediation missing or not unique");
      r.require(!mediate_pushout(cat, po, add(cat, x, e), y).exists(), "pushout mediation for a non-commuting cocone");
      ++commuting;
      ++perturbed;
      break;
    }
  }
  r.detail = std::to_string(commuting) + " commuting, " + std::to_string(perturbed) + " perturbed, " +
             std::to_string(redrawn) + " redrawn";
  r.require(commuting == 1000 && perturbed == 1000, "cone counts off");
  return r;
}

int cli_code(std::vector<std::string> args) {
  args.insert(args.begin(), "couples");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace

int main() {
  std::cout << "building corpus...\n";
  const Corpus corpus = build_corpus();
  std::vector<Derived<VectObject>> dv;
  std::vector<Derived<FiltObject>> df;

  run(1, "both derived couples exact", [&] {
    Result r;
    dv = derive_all(vect, corpus.vect, "vect");
    df = derive_all(filt, corpus.filt, "filt");
    check_exact(vect, dv, r);
    check_exact(filt, df, r);
    r.require(dv.size() >= 200, "fewer than 200 vect couples");
    r.require(df.size() >= 50, "fewer than 50 filt couples");
    r.detail = std::to_string(dv.size()) + " vect + " + std::to_string(df.size()) + " filt couples, 2 sides each";
    return r;
  });

  run(2, "theta' = beta' gamma, tau' = beta gamma'', H- ~ E1-, H+ ~ E1+", [&] {
    Result r;
    r.require(!dv.empty() && !df.empty(), "criterion 1 produced no derivations");
    check_identification(dv, r);
    check_identification(df, r);
    r.detail = std::to_string(dv.size() + df.size()) + " couples";
    return r;
  });

  run(3, "omega unique, equations hold, bimorphism, iso when certified", [&] {
    Result r;
    std::size_t isos = 0;
    r.require(!dv.empty() && !df.empty(), "criterion 1 produced no derivations");
    check_omega(dv, r, isos);
    check_omega(df, r, isos);
    r.detail = std::to_string(dv.size() + df.size()) + " couples, " + std::to_string(isos) + " iso";
    return r;
  });

  run(4, "depth-3 trees complete and exact", [&] {
    Result r;
    const auto doc = read_document(kFixtures / "massey_complex.json");
    r.require(doc.complex.has_value(), "massey_complex.json is not a complex");
    const auto massey = massey_couple(*doc.complex);
    const std::vector<std::pair<std::string, ExactCouple<VectObject>>> roots = {
        {"degenerate", degenerate_couple()}, {"alpha = 0", alpha_zero_couple()}, {"massey", massey.couple}};
    std::string sizes;
    for (const auto& [name, root] : roots) {
      const auto tree = iterate(vect, root, {3, Sides::both, {}, false});
      for (std::size_t k = 0; k <= 3; ++k) {
        r.require(tree.level(k).size() == (std::size_t{1} << k), name + ": wrong node count at depth " + std::to_string(k));
      }
      r.require(tree.level(3).size() == 8, name + ": not 8 leaves");
      r.require(tree.all_exact(), name + ": a node is not exact");
      r.require(tree.failures.empty(), name + ": " + (tree.failures.empty() ? "" : tree.failures[0]));
      for (const auto& n : tree.nodes) {
        const auto& c = n.certificate;
        r.require(c.abort_reason.empty() && !c.alpha_powers_strict.empty(), name + ": node '" + n.path + "' has no certificate");
      }
      r.require(tree.omegas.size() == 7, name + ": missing sibling omegas");
      sizes += (sizes.empty() ? "" : ", ") + name + " " + std::to_string(tree.nodes.size());
    }
    r.detail = "nodes: " + sizes;
    return r;
  });

  run(5, "lemma suites in filt, 500 trials each", [&] {
    Result r;
    std::string detail;
    for (auto kind : {LemmaKind::first, LemmaKind::second, LemmaKind::pushout_strict}) {
      const auto rep = run_lemma_suite(filt, kind, 500, 5000 + static_cast<int>(kind));
      r.require(rep.ok() && rep.hypotheses_verified == 500 && rep.conclusions_held == 500,
                std::string(to_string(kind)) + ": " + (rep.failures.empty() ? "counts off" : rep.failures[0]));
      detail += (detail.empty() ? "" : ", ") + std::string(to_string(kind)) + " " +
                std::to_string(rep.conclusions_held) + "/" + std::to_string(rep.trials);
    }
    r.detail = detail;
    return r;
  });

  run(6, "vect: dim H- = dim H+ = dim ker d - rank d", [&] {
    Result r;
    std::mt19937_64 rng(606);
    for (int i = 0; i < 200; ++i) {
      const auto c = random_massey_couple(rng).couple;
      const Matrix d = differential(vect, c).matrix;
      const std::size_t rk = oracle_rank(d);
      const std::size_t expected = (d.cols() - rk) - rk;
      const auto h = cohomology(vect, differential(vect, c));
      r.require(h.h_minus.dim == expected && h.h_plus.dim == expected,
                "couple " + std::to_string(i) + ": H dims " + std::to_string(h.h_minus.dim) + "/" +
                    std::to_string(h.h_plus.dim) + ", oracle " + std::to_string(expected));
    }
    r.detail = "200 couples";
    return r;
  });

  run(7, "E dims after one and two derivations equal subquotient pages", [&] {
    Result r;
    std::mt19937_64 rng(707);
    std::size_t nontrivial = 0;
    for (int i = 0; i < 40; ++i) {
      const auto fc = random_filtered_complex(rng, {12, 3, 3, false});
      r.require(fc.total_dim() <= 12 && fc.levels() == 4, "complex outside the stated size");
      const auto m = massey_couple(fc, i);
      const oracle::Pages pages(m.complex);
      const auto tree = iterate(vect, m.couple, {2, Sides::both, {}, false});
      r.require(tree.ok(), "tree " + std::to_string(i) + " incomplete");
      for (std::size_t k = 1; k <= 2; ++k) {
        const std::size_t want = pages.total(static_cast<long>(k) + 1);
        for (const auto* n : tree.level(k)) {
          r.require(n->couple.E.dim == want, "complex " + std::to_string(i) + " node '" + n->path + "': E dim " +
                                                 std::to_string(n->couple.E.dim) + ", page " + std::to_string(want));
        }
      }
      if (pages.total(1) != pages.total(2) && pages.total(2) != pages.total(3)) ++nontrivial;
    }
    r.detail = "40 complexes, " + std::to_string(nontrivial) + " with d1 and d2 both nonzero";
    r.require(nontrivial > 0, "no complex exercises d1 and d2");
    return r;
  });

  run(8, "pullback/pushout mediation, 500 cones per backend", [&] {
    Result v = cones(vect, 808);
    Result f = cones(filt, 809);
    Result r;
    r.pass = v.pass && f.pass;
    r.problems = v.problems;
    r.problems.insert(r.problems.end(), f.problems.begin(), f.problems.end());
    r.detail = "vect: " + v.detail + "; filt: " + f.detail;
    return r;
  });

  run(9, "filt: bar monic and epic; shift is a non-strict bimorphism", [&] {
    Result r;
    std::mt19937_64 rng(909);
    std::size_t non_iso = 0;
    for (int i = 0; i < 500; ++i) {
      const auto f = filt.random_morphism(rng, filt.random_object(rng, 4), filt.random_object(rng, 4));
      const auto fac = factorize(filt, f);
      r.require(is_monic(filt, fac.bar) && is_epic(filt, fac.bar), "bar not a bimorphism: " + to_string(f.matrix));
      if (!is_iso(filt, fac.bar)) ++non_iso;
    }
    const auto shift = shift_morphism();
    const auto fac = factorize(filt, shift);
    r.require(is_monic(filt, fac.bar) && is_epic(filt, fac.bar), "shift: bar not a bimorphism");
    r.require(!is_iso(filt, fac.bar), "shift: bar is iso");
    const auto cert = is_strict(filt, shift);
    r.require(!cert.strict && cert.level == std::optional<std::size_t>(1), "shift: missing level witness");
    r.detail = "500 morphisms (" + std::to_string(non_iso) + " non-strict), shift fails at level " +
               (cert.level ? std::to_string(*cert.level) : std::string("?"));
    return r;
  });

  run(10, "canonical round trip and exit codes", [&] {
    Result r;
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
      if (entry.path().extension() != ".json" || entry.path().filename() == "beta_not_filtered.json") continue;
      const std::string text = slurp(entry.path());
      r.require(serialize(parse_document(text)) == text, entry.path().filename().string() + " does not round-trip");
      ++files;
    }
    r.require(files >= 7, "fixtures missing");
    const auto inexact = std::filesystem::temp_directory_path() / "couples_acceptance_inexact.json";
    {
      auto j = to_json(alpha_zero_couple());
      j["morphisms"]["gamma"] = Json::parse(R"([["0", "0"]])");
      std::ofstream(inexact) << dump_canonical(j);
    }
    const std::vector<std::pair<std::vector<std::string>, int>> cases = {
        {{"check", (kFixtures / "zero.json").string()}, cli::kExitOk},
        {{"check", (kFixtures / "f1.json").string()}, cli::kExitOk},
        {{"derive", (kFixtures / "degenerate.json").string(), "--depth", "3"}, cli::kExitOk},
        {{"cohomology", (kFixtures / "partial_zero.json").string()}, cli::kExitOk},
        {{"check", inexact.string()}, cli::kExitInvalid},
        {{"derive", (kFixtures / "beta_nonstrict.json").string()}, cli::kExitInvalid},
        {{"check", (kFixtures / "beta_not_filtered.json").string()}, cli::kExitUsage},
        {{"check", "/nonexistent.json"}, cli::kExitUsage},
        {{"frobnicate"}, cli::kExitUsage},
        {{"derive", (kFixtures / "zero.json").string(), "--depth", "-1"}, cli::kExitUsage},
    };
    for (const auto& [args, want] : cases) {
      const int got = cli_code(args);
      std::string line;
      for (const auto& a : args) line += a + " ";
      r.require(got == want, line + "exited " + std::to_string(got) + ", want " + std::to_string(want));
    }
    std::filesystem::remove(inexact);
    r.detail = std::to_string(files) + " fixtures, " + std::to_string(cases.size()) + " exit-code cases";
    return r;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
