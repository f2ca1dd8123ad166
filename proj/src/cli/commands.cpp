#include "couples/cli/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "couples/gen/massey.hpp"
#include "couples/gen/spectral_pages.hpp"
#include "couples/io/document.hpp"

namespace couples::cli {

SemistabilityOptions Options::semistability() const {
  SemistabilityOptions s;
  s.seed = seed;
  if (probes) {
    s.probes = *probes;
    s.force_probes = true;
  }
  return s;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* holds(bool b) { return b ? "holds" : "FAILS"; }

std::string dims_of(const VectObject& x) { return std::to_string(x.dim); }
std::string dims_of(const FiltObject& x) {
  std::string s = std::to_string(x.dim()) + " (steps";
  for (const auto& step : x.steps()) s += " " + std::to_string(step.dim());
  return s + ")";
}

std::string strict_text(const StrictnessCertificate<VectObject>& c) { return yes_no(c.strict); }
template <class Obj>
std::string strict_text(const StrictnessCertificate<Obj>& c) {
  if (c.strict) return "yes";
  return c.level ? "no (level " + std::to_string(*c.level) + ")" : "no";
}

// A couple read from a document; complexes are turned into their Massey couple.
struct Loaded {
  Document doc;
  std::optional<MasseyCouple> massey;
};

Loaded load(const std::filesystem::path& path) {
  Loaded l{read_document(path), std::nullopt};
  if (l.doc.complex) {
    l.massey = massey_couple(*l.doc.complex);
    l.doc.vect = l.massey->couple;
  }
  return l;
}

template <class F>
int dispatch(const Loaded& l, F&& f) {
  if (l.doc.vect) return f(VectCategory{}, *l.doc.vect);
  return f(FiltCategory{}, *l.doc.filt);
}

template <class F>
int guarded(const std::filesystem::path& path, std::ostream& err, F&& f) {
  try {
    return f(load(path));
  } catch (const DocumentError& e) {
    err << "error: " << path.string() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

void print_pages(const MasseyCouple& m, std::size_t pages, std::ostream& out) {
  out << "massey couple of a filtered complex (capped by a cone), total dim " << m.complex.total_dim() << '\n';
  for (std::size_t r = 1; r <= pages; ++r) {
    out << "  page " << r << ": dim " << spectral_page_total(m.complex, r) << '\n';
  }
}

template <LinearCategory C>
bool report_check(const C& cat, const ExactCouple<ObjectOf<C>>& c, const Options& opts, std::ostream& out) {
  out << "backend: " << C::kName << '\n';
  out << "D: dim " << dims_of(c.D) << '\n';
  out << "E: dim " << dims_of(c.E) << '\n';
  const auto v = validate_couple(cat, c.alpha, c.beta, c.gamma);
  for (const auto& group : {v.subobjects, v.quotients}) {
    for (const auto& check : group) {
      out << "  " << std::left << std::setw(24) << check.name << holds(check.holds) << '\n';
      if (!check.holds) out << "    " << check.detail << '\n';
      if (opts.certificate && check.witness) out << "    witness " << to_string(check.witness->matrix) << '\n';
    }
  }
  const auto sa = is_strict(cat, c.alpha), sb = is_strict(cat, c.beta), sg = is_strict(cat, c.gamma);
  out << "strict: alpha " << strict_text(sa) << ", beta " << strict_text(sb) << ", gamma " << strict_text(sg) << '\n';
  if (opts.certificate) {
    for (const auto* s : {&sa, &sb, &sg}) {
      if (s->inverse) out << "  bar inverse " << to_string(s->inverse->matrix) << '\n';
    }
  }
  const auto kg = is_semistable_kernel(cat, cat.kernel(c.gamma), opts.semistability());
  const auto cb = is_semistable_cokernel(cat, cat.cokernel(c.beta), opts.semistability());
  out << "semistable: ker gamma " << to_string(kg.verdict) << ", cok beta " << to_string(cb.verdict) << '\n';
  if (!kg.holds()) out << "  " << kg.witness << '\n';
  if (!cb.holds()) out << "  " << cb.witness << '\n';
  out << (v.valid() ? "valid" : "INVALID") << '\n';
  return v.valid();
}

template <class Obj>
Json certificate_json(const NodeCertificate& cert) {
  Json j;
  j["exact"] = cert.exact;
  j["alpha_strict"] = cert.alpha_strict;
  j["beta_strict"] = cert.beta_strict;
  j["gamma_strict"] = cert.gamma_strict;
  j["ker_gamma"] = to_string(cert.ker_gamma.verdict);
  j["cok_beta"] = to_string(cert.cok_beta.verdict);
  Json powers = Json::array();
  for (bool b : cert.alpha_powers_strict) powers.push_back(b);
  j["alpha_powers_strict"] = std::move(powers);
  return j;
}

std::size_t dim_of(const VectObject& x) { return x.dim; }
std::size_t dim_of(const FiltObject& x) { return x.dim(); }

template <class Obj>
Json omega_json(const SiblingOmega<Obj>& s, bool certificate) {
  const auto& o = s.omega;
  Json j;
  j["parent"] = s.parent;
  j["unique"] = o.unique;
  j["family_dim"] = o.family_dim;
  j["monic"] = o.monic;
  j["epic"] = o.epic;
  j["bimorphism"] = o.monic && o.epic;
  j["iso"] = o.iso;
  j["iso_required"] = o.iso_required;
  j["defining_equation"] = o.defining_equation;
  j["beta_equation"] = o.beta_equation;
  j["gamma_equation"] = o.gamma_equation;
  j["cohomology_equation"] = o.cohomology_equation;
  j["theta_matches"] = s.identification.theta_matches;
  j["tau_matches"] = s.identification.tau_matches;
  j["ker_partial"] = to_string(o.ker_partial.verdict);
  j["cok_partial"] = to_string(o.cok_partial.verdict);
  if (certificate && o.omega) j["omega"] = matrix_to_json(o.omega->matrix);
  return j;
}

template <LinearCategory C>
int run_derive(const C& cat, const ExactCouple<ObjectOf<C>>& c, const Loaded& l, const Options& opts,
               std::ostream& out) {
  IterateOptions io;
  io.depth = opts.depth;
  io.sides = opts.side;
  io.semistability = opts.semistability();
  io.parallel = opts.parallel;
  const auto tree = iterate(cat, c, io);

  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = "tree";
  doc["backend"] = std::string(C::kName);
  doc["side"] = to_string(opts.side);
  doc["depth"] = opts.depth;
  Json nodes = Json::array();
  out << std::left << std::setw(8) << "node" << std::setw(6) << "D" << std::setw(6) << "E" << std::setw(7) << "exact"
      << "strict(a,b,g)" << '\n';
  for (const auto& n : tree.nodes) {
    const auto& cert = n.certificate;
    Json j;
    j["path"] = n.path;
    j["D"] = dim_of(n.couple.D);
    j["E"] = dim_of(n.couple.E);
    j["certificate"] = certificate_json<ObjectOf<C>>(cert);
    if (!cert.abort_reason.empty()) j["aborted"] = cert.abort_reason;
    if (opts.certificate) j["couple"] = to_json(n.couple);
    nodes.push_back(std::move(j));
    out << std::setw(8) << (n.path.empty() ? "root" : n.path) << std::setw(6) << dim_of(n.couple.D) << std::setw(6)
        << dim_of(n.couple.E) << std::setw(7) << yes_no(cert.exact) << yes_no(cert.alpha_strict) << ","
        << yes_no(cert.beta_strict) << "," << yes_no(cert.gamma_strict);
    if (!cert.abort_reason.empty()) out << "  aborted: " << cert.abort_reason;
    out << '\n';
  }
  doc["nodes"] = std::move(nodes);
  Json omegas = Json::array();
  for (const auto& s : tree.omegas) {
    omegas.push_back(omega_json(s, opts.certificate));
    const auto& o = s.omega;
    out << "omega at " << (s.parent.empty() ? "root" : s.parent) << ": "
        << (o.unique ? "unique" : "not unique") << ", " << (o.monic && o.epic ? "bimorphism" : "not a bimorphism")
        << ", " << (o.iso ? "iso" : "not iso") << '\n';
  }
  doc["omegas"] = std::move(omegas);

  std::vector<std::string> failures = tree.failures;
  if (!tree.complete()) failures.push_back("tree is not complete");
  if (l.massey) {
    Json spectral = Json::array();
    std::vector<std::size_t> totals;
    for (std::size_t r = 1; r <= opts.depth + 1; ++r) totals.push_back(spectral_page_total(l.massey->complex, r));
    for (const auto& n : tree.nodes) {
      const std::size_t page = n.path.size() + 1;
      const bool match = dim_of(n.couple.E) == totals[page - 1];
      Json j;
      j["path"] = n.path;
      j["page"] = page;
      j["E"] = dim_of(n.couple.E);
      j["page_dim"] = totals[page - 1];
      j["match"] = match;
      spectral.push_back(std::move(j));
      out << "page " << page << " at " << (n.path.empty() ? "root" : n.path) << ": E dim " << dim_of(n.couple.E)
          << ", subquotient dim " << totals[page - 1] << (match ? "" : "  MISMATCH") << '\n';
      if (!match) failures.push_back("node '" + n.path + "' does not match page " + std::to_string(page));
    }
    doc["spectral"] = std::move(spectral);
  }
  doc["failures"] = failures;
  for (const auto& f : failures) out << "failure: " << f << '\n';
  out << (failures.empty() ? "tree complete, every node exact" : "derivation FAILED") << '\n';
  if (opts.out) {
    std::ofstream file(*opts.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + opts.out->string());
    file << dump_canonical(doc);
  }
  return failures.empty() ? kExitOk : kExitInvalid;
}

template <LinearCategory C>
int run_cohomology(const C& cat, const ExactCouple<ObjectOf<C>>& c, const Options& opts, std::ostream& out) {
  const auto partial = differential(cat, c);
  const auto h = cohomology(cat, partial);
  const std::size_t ker = cat.dim(h.kerp.source);
  const std::size_t rk = rank(partial.matrix);
  out << "E: dim " << cat.dim(c.E) << ", dim ker partial " << ker << ", rank partial " << rk << '\n';
  out << "H-: dim " << cat.dim(h.h_minus) << '\n';
  out << "H+: dim " << cat.dim(h.h_plus) << '\n';
  out << "  cok theta = cok theta'   " << holds(h.cok_theta_matches) << '\n';
  out << "  ker tau = ker tau'       " << holds(h.ker_tau_matches) << '\n';
  bool ok = h.cok_theta_matches && h.ker_tau_matches;
  const auto alpha = is_strict(cat, c.alpha);
  if (!alpha.strict) {
    out << "alpha is not strict; derived couples and omega are not available\n";
    return ok ? kExitOk : kExitInvalid;
  }
  const auto t = derive_both(cat, c, opts.semistability());
  const auto& id = t.identification;
  out << "  theta' = beta' gamma     " << holds(id.theta_matches) << '\n';
  out << "  tau' = beta gamma''      " << holds(id.tau_matches) << '\n';
  out << "  E1- iso H-               " << holds(id.minus_iso.has_value()) << '\n';
  out << "  E1+ iso H+               " << holds(id.plus_iso.has_value()) << '\n';
  const auto& o = t.omega;
  out << "omega: " << (o.unique ? "unique" : "not unique") << " (family dim " << o.family_dim << "), monic "
      << yes_no(o.monic) << ", epic " << yes_no(o.epic) << ", iso " << yes_no(o.iso) << '\n';
  out << "  omega beta1- = beta1+    " << holds(o.beta_equation) << '\n';
  out << "  gamma1- = gamma1+ omega  " << holds(o.gamma_equation) << '\n';
  out << "  rho'' omega sigma' = sigma'' rho'  " << holds(o.defining_equation) << '\n';
  out << "  (ker tau) m (cok theta) = (cok partial)(ker partial), m ~ omega  " << holds(o.cohomology_equation)
      << '\n';
  out << "semistable: ker partial " << to_string(o.ker_partial.verdict) << ", cok partial "
      << to_string(o.cok_partial.verdict) << '\n';
  if (opts.certificate && o.omega) out << "omega " << to_string(o.omega->matrix) << '\n';
  ok = ok && id.ok() && o.ok();
  return ok ? kExitOk : kExitInvalid;
}

}  // namespace

int cmd_check(const std::filesystem::path& path, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(path, err, [&](const Loaded& l) {
    if (l.massey) print_pages(*l.massey, 3, out);
    return dispatch(l, [&](const auto& cat, const auto& c) {
      return report_check(cat, c, opts, out) ? kExitOk : kExitInvalid;
    });
  });
}

int cmd_derive(const std::filesystem::path& path, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(path, err, [&](const Loaded& l) {
    return dispatch(l, [&](const auto& cat, const auto& c) {
      std::ostringstream sink;
      if (!report_check(cat, c, opts, sink)) {
        out << sink.str();
        err << "error: not an exact couple\n";
        return kExitInvalid;
      }
      return run_derive(cat, c, l, opts, out);
    });
  });
}

int cmd_cohomology(const std::filesystem::path& path, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(path, err, [&](const Loaded& l) {
    return dispatch(l, [&](const auto& cat, const auto& c) {
      if (!validate_couple(cat, c.alpha, c.beta, c.gamma).valid()) {
        err << "error: not an exact couple\n";
        return kExitInvalid;
      }
      return run_cohomology(cat, c, opts, out);
    });
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact couples over Q: validation, derivation and cohomology"};
  app.require_subcommand(1);
  Options opts;
  std::string file;
  std::string out_path;
  std::size_t probes = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "couple or complex document")->required();
    sub->add_flag("--certificate", opts.certificate, "include witness morphisms");
    sub->add_option("--seed", opts.seed, "seed for semistability probes");
    sub->add_option("--probes", probes, "probe semistability with N random pushouts/pullbacks");
  };
  auto* check = app.add_subcommand("check", "validate an exact couple");
  add_common(check);
  auto* derive = app.add_subcommand("derive", "derive a couple repeatedly");
  add_common(derive);
  const std::map<std::string, Sides> side_names{{"left", Sides::left}, {"right", Sides::right}, {"both", Sides::both}};
  derive->add_option("--side", opts.side, "left, right or both")->transform(CLI::CheckedTransformer(side_names));
  derive->add_option("--depth", opts.depth, "number of derivations");
  derive->add_option("--out", out_path, "write the tree document here");
  derive->add_flag("--parallel", opts.parallel, "derive sibling nodes concurrently");
  auto* coh = app.add_subcommand("cohomology", "left and right cohomology of the differential");
  add_common(coh);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (auto* sub : {check, derive, coh}) {
    if (sub->count("--probes") > 0) opts.probes = probes;
  }
  if (!out_path.empty()) opts.out = out_path;
  if (check->parsed()) return cmd_check(file, opts, out, err);
  if (derive->parsed()) return cmd_derive(file, opts, out, err);
  return cmd_cohomology(file, opts, out, err);
}

}  // namespace couples::cli
