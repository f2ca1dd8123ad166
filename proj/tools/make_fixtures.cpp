// Writes the shipped fixture documents into the directory given as argv[1].
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "couples/gen/random_couples.hpp"
#include "couples/gen/spectral_pages.hpp"
#include "couples/io/document.hpp"

using namespace couples;

namespace {

void write(const std::filesystem::path& dir, const char* name, const Json& j) {
  std::ofstream(dir / name, std::ios::binary) << dump_canonical(j);
}

// A complex whose first three pages all differ and stay nonzero.
FilteredComplex pick_complex() {
  for (std::uint64_t seed = 1;; ++seed) {
    std::mt19937_64 rng(seed);
    const auto fc = random_filtered_complex(rng, {12, 3, 3, false});
    const auto capped = cap_with_cone(fc);
    const auto e1 = spectral_page_total(capped, 1);
    const auto e2 = spectral_page_total(capped, 2);
    const auto e3 = spectral_page_total(capped, 3);
    if (fc.total_dim() >= 10 && e1 > e2 && e2 > e3 && e3 > 0) return fc;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures DIR\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  write(dir, "zero.json", to_json(zero_couple()));
  write(dir, "degenerate.json", to_json(degenerate_couple()));
  write(dir, "alpha_zero.json", to_json(alpha_zero_couple()));
  write(dir, "partial_zero.json", to_json(partial_zero_couple()));
  write(dir, "massey_complex.json", to_json(pick_complex()));
  write(dir, "f1.json", to_json(f1_couple()));

  // alpha_zero with E filtered by span{e1}: exact, but beta is not strict.
  const auto az = alpha_zero_couple();
  const FiltObject d = FiltObject::trivial(1);
  const FiltObject e(2, {Subspace::full(2), Subspace::span(Matrix::from_rows({{1}, {0}})), Subspace::zero(2)});
  FiltCategory cat;
  const ExactCouple<FiltObject> nonstrict{d, e, {d, d, az.alpha.matrix}, {d, e, az.beta.matrix},
                                          {e, d, az.gamma.matrix}};
  write(dir, "beta_nonstrict.json", to_json(nonstrict));

  // The same couple with D filtered by D ⊇ D ⊇ 0 and E trivially: beta then
  // maps F_1 D = D outside F_1 E = 0.
  const FiltObject d2(1, {Subspace::full(1), Subspace::full(1), Subspace::zero(1)});
  const FiltObject e2 = FiltObject::trivial(2);
  Json bad = to_json(ExactCouple<FiltObject>{d2, e2, {d2, d2, az.alpha.matrix}, {d2, e2, az.beta.matrix},
                                             {e2, d2, az.gamma.matrix}});
  write(dir, "beta_not_filtered.json", bad);
  return 0;
}
