#include "couples/gen/spectral_pages.hpp"

#include <numeric>

#include "couples/linalg/echelon.hpp"

namespace couples {

namespace {

// F_p C_n for any integer p.
Subspace filtered(const FilteredComplex& fc, long p, std::size_t n) {
  if (p <= 0) return Subspace::full(fc.dims[n]);
  return fc.step(static_cast<std::size_t>(p), n);
}

Subspace z(const FilteredComplex& fc, long p, long r, std::size_t n) {
  const Subspace fp = filtered(fc, p, n);
  if (n == 0) return fp;
  return intersection(fp, preimage_of(fc.d[n], filtered(fc, p + r, n - 1)));
}

}  // namespace

std::vector<PageEntry> spectral_page(const FilteredComplex& fc, std::size_t r) {
  std::vector<PageEntry> out;
  const long rr = static_cast<long>(r);
  for (std::size_t p = 0; p + 1 < fc.levels(); ++p) {
    const long pp = static_cast<long>(p);
    for (std::size_t n = 0; n < fc.degrees(); ++n) {
      const Subspace top = z(fc, pp, rr, n);
      Subspace bottom = z(fc, pp + 1, rr - 1, n);
      if (n + 1 < fc.degrees()) bottom = sum(bottom, image_of(fc.d[n + 1], z(fc, pp - rr + 1, rr - 1, n + 1)));
      out.push_back({p, n, top.dim() - bottom.dim()});
    }
  }
  return out;
}

std::size_t spectral_page_total(const FilteredComplex& fc, std::size_t r) {
  const auto page = spectral_page(fc, r);
  return std::accumulate(page.begin(), page.end(), std::size_t{0},
                         [](std::size_t acc, const PageEntry& e) { return acc + e.dim; });
}

}  // namespace couples
