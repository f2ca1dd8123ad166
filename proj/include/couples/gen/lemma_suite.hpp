#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "couples/filt/filt_category.hpp"
#include "couples/vect/vect_category.hpp"

namespace couples {

/**
 * first:          alpha = cok beta and im beta = ker(rho alpha)  =>  rho monic.
 * second:         coim alpha = cok(rho beta), rho a kernel       =>  im beta = ker(alpha rho).
 * pushout_strict: x strict, im x a semistable kernel, y the pushout of x
 *                 along s  =>  y strict and im y a semistable kernel.
 */
enum class LemmaKind { first, second, pushout_strict };

const char* to_string(LemmaKind k);
std::optional<LemmaKind> parse_lemma_kind(const std::string& name);

struct LemmaReport {
  LemmaKind kind = LemmaKind::first;
  std::size_t trials = 0;
  /// Instances whose hypotheses were re-verified.
  std::size_t hypotheses_verified = 0;
  std::size_t conclusions_held = 0;
  /// Draws discarded because the hypotheses did not hold.
  std::size_t discarded = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && conclusions_held == trials; }
};

/// Instances are built forward so the hypotheses hold, then re-checked.
LemmaReport run_lemma_suite(const VectCategory& cat, LemmaKind kind, std::size_t trials, std::uint64_t seed);
LemmaReport run_lemma_suite(const FiltCategory& cat, LemmaKind kind, std::size_t trials, std::uint64_t seed);

}  // namespace couples
