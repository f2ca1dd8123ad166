#pragma once

#include <cstddef>
#include <vector>

#include "couples/gen/filtered_complex.hpp"

namespace couples {

struct PageEntry {
  std::size_t p;
  std::size_t n;
  std::size_t dim;
};

/**
 * dim E_r^{p,n} = dim Z_r^p / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1}) in every
 * degree, where Z_r^p = {x in F_p : dx in F_{p+r}} and F_p = C for p <= 0.
 * Page r = 1 is the homology of the graded pieces.
 */
std::vector<PageEntry> spectral_page(const FilteredComplex& fc, std::size_t r);

/// Sum of the entries of spectral_page(fc, r).
std::size_t spectral_page_total(const FilteredComplex& fc, std::size_t r);

}  // namespace couples
