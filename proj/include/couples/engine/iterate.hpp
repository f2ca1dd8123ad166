#pragma once

#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "couples/engine/omega.hpp"

namespace couples {

enum class Sides { left, right, both };

inline const char* to_string(Sides s) {
  switch (s) {
    case Sides::left: return "left";
    case Sides::right: return "right";
    case Sides::both: return "both";
  }
  return "?";
}

struct IterateOptions {
  std::size_t depth = 1;
  Sides sides = Sides::both;
  SemistabilityOptions semistability;
  /// Derive the two children of a node concurrently.
  bool parallel = false;
};

struct NodeCertificate {
  bool exact = false;
  bool alpha_strict = false;
  bool beta_strict = false;
  bool gamma_strict = false;
  SemistabilityVerdict ker_gamma;
  SemistabilityVerdict cok_beta;
  /// alpha_powers_strict[k - 1] is the strictness of alpha^k.
  std::vector<bool> alpha_powers_strict;
  /// Why the node was not derived further (empty when it was, or at a leaf).
  std::string abort_reason;
};

template <class Obj>
struct TreeNode {
  /// 'L'/'R' edge labels from the root; the root has the empty path.
  std::string path;
  ExactCouple<Obj> couple;
  NodeCertificate certificate;
};

template <class Obj>
struct SiblingOmega {
  /// Path of the parent whose two derived couples omega compares.
  std::string parent;
  OmegaData<Obj> omega;
  CohomologyIdentification<Obj> identification;
};

template <class Obj>
struct CoupleTree {
  std::size_t depth = 0;
  Sides sides = Sides::both;
  /// Breadth-first, left before right.
  std::vector<TreeNode<Obj>> nodes;
  std::vector<SiblingOmega<Obj>> omegas;
  std::vector<std::string> failures;

  std::vector<const TreeNode<Obj>*> level(std::size_t k) const {
    std::vector<const TreeNode<Obj>*> out;
    for (const auto& n : nodes) {
      if (n.path.size() == k) out.push_back(&n);
    }
    return out;
  }
  const TreeNode<Obj>* find(const std::string& path) const {
    for (const auto& n : nodes) {
      if (n.path == path) return &n;
    }
    return nullptr;
  }
  bool complete() const {
    const std::size_t width = sides == Sides::both ? 2 : 1;
    std::size_t expected = 1;
    for (std::size_t k = 0; k <= depth; ++k, expected *= width) {
      if (level(k).size() != expected) return false;
    }
    return true;
  }
  bool all_exact() const {
    return std::all_of(nodes.begin(), nodes.end(), [](const auto& n) { return n.certificate.exact; });
  }
  bool ok() const { return failures.empty() && complete() && all_exact(); }
};

template <LinearCategory C>
NodeCertificate certify_node(const C& cat, const ExactCouple<ObjectOf<C>>& c, std::size_t powers,
                             const SemistabilityOptions& opts) {
  NodeCertificate cert;
  cert.exact = validate_couple(cat, c.alpha, c.beta, c.gamma).valid();
  cert.alpha_strict = is_strict(cat, c.alpha).strict;
  cert.beta_strict = is_strict(cat, c.beta).strict;
  cert.gamma_strict = is_strict(cat, c.gamma).strict;
  cert.ker_gamma = is_semistable_kernel(cat, cat.kernel(c.gamma), opts);
  cert.cok_beta = is_semistable_cokernel(cat, cat.cokernel(c.beta), opts);
  auto a = c.alpha;
  for (std::size_t k = 1; k <= powers; ++k) {
    if (k > 1) a = compose(cat, c.alpha, a);
    cert.alpha_powers_strict.push_back(is_strict(cat, a).strict);
  }
  return cert;
}

namespace detail {

template <class Obj>
struct Subtree {
  std::vector<TreeNode<Obj>> nodes;
  std::vector<SiblingOmega<Obj>> omegas;
  std::vector<std::string> failures;

  void absorb(Subtree&& other) {
    std::move(other.nodes.begin(), other.nodes.end(), std::back_inserter(nodes));
    std::move(other.omegas.begin(), other.omegas.end(), std::back_inserter(omegas));
    std::move(other.failures.begin(), other.failures.end(), std::back_inserter(failures));
  }
};

template <LinearCategory C>
Subtree<ObjectOf<C>> grow(const C& cat, ExactCouple<ObjectOf<C>> c, std::string path, std::size_t remaining,
                          const IterateOptions& opts) {
  using Obj = ObjectOf<C>;
  Subtree<Obj> out;
  TreeNode<Obj> node{path, std::move(c), {}};
  auto& cert = node.certificate;
  try {
    cert = certify_node(cat, node.couple, std::max<std::size_t>(remaining, 1), opts.semistability);
  } catch (const std::exception& e) {
    cert.abort_reason = e.what();
    out.failures.push_back("node '" + path + "': " + e.what());
    out.nodes.push_back(std::move(node));
    return out;
  }
  if (!cert.exact) out.failures.push_back("node '" + path + "' is not an exact couple");
  if (remaining == 0) {
    out.nodes.push_back(std::move(node));
    return out;
  }
  if (!cert.alpha_strict) cert.abort_reason = "alpha is not strict";
  else if (!cert.beta_strict) cert.abort_reason = "beta is not strict";
  else if (!cert.gamma_strict) cert.abort_reason = "gamma is not strict";
  else if (!cert.ker_gamma.holds()) cert.abort_reason = "ker gamma is not semistable: " + cert.ker_gamma.witness;
  else if (!cert.cok_beta.holds()) cert.abort_reason = "cok beta is not semistable: " + cert.cok_beta.witness;
  if (!cert.abort_reason.empty()) {
    out.failures.push_back("node '" + path + "' not derived: " + cert.abort_reason);
    out.nodes.push_back(std::move(node));
    return out;
  }

  std::optional<DerivedCouple<Obj>> left, right;
  try {
    const auto dec = decompose_strict_alpha(cat, node.couple);
    if (opts.sides != Sides::right) left = derive(cat, node.couple, dec, Side::left);
    if (opts.sides != Sides::left) right = derive(cat, node.couple, dec, Side::right);
    if (left && right) {
      const auto h = cohomology(cat, differential(cat, node.couple));
      auto ident = identify_cohomology(cat, node.couple, *left, *right, h);
      for (const auto& f : ident.failures) out.failures.push_back("node '" + path + "': " + f);
      auto om = omega(cat, *left, *right, h, ident, opts.semistability);
      if (!om.ok()) out.failures.push_back("node '" + path + "': omega check failed");
      out.omegas.push_back({path, std::move(om), std::move(ident)});
    }
  } catch (const std::exception& e) {
    cert.abort_reason = e.what();
    out.failures.push_back("node '" + path + "': " + e.what());
    out.nodes.push_back(std::move(node));
    return out;
  }
  out.nodes.push_back(std::move(node));

  auto child = [&](std::optional<DerivedCouple<Obj>>& d, char label) {
    return grow(cat, std::move(d->couple), path + label, remaining - 1, opts);
  };
  if (left && right && opts.parallel) {
    auto fut = std::async(std::launch::async, [&] { return child(left, 'L'); });
    auto r = child(right, 'R');
    out.absorb(fut.get());
    out.absorb(std::move(r));
  } else {
    if (left) out.absorb(child(left, 'L'));
    if (right) out.absorb(child(right, 'R'));
  }
  return out;
}

}  // namespace detail

/// Iterated derivation: a complete binary tree (or a chain for one side) of
/// depth opts.depth. Preconditions are re-checked at every node; a node that
/// fails them keeps its certificate but gets no children.
template <LinearCategory C>
CoupleTree<ObjectOf<C>> iterate(const C& cat, const ExactCouple<ObjectOf<C>>& root, const IterateOptions& opts) {
  auto sub = detail::grow(cat, root, "", opts.depth, opts);
  CoupleTree<ObjectOf<C>> tree;
  tree.depth = opts.depth;
  tree.sides = opts.sides;
  tree.nodes = std::move(sub.nodes);
  tree.omegas = std::move(sub.omegas);
  tree.failures = std::move(sub.failures);
  const auto bfs = [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };
  std::sort(tree.nodes.begin(), tree.nodes.end(), [&](const auto& a, const auto& b) { return bfs(a.path, b.path); });
  std::sort(tree.omegas.begin(), tree.omegas.end(),
            [&](const auto& a, const auto& b) { return bfs(a.parent, b.parent); });
  return tree;
}

}  // namespace couples
