#include "tork/hochster.hpp"

#include "tork/parallel.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace tork {

BettiTable hochster_betti(const SimplicialComplex& k, const HochsterOptions& options) {
  const int m = k.num_vertices();
  if (m > options.cap) {
    throw std::invalid_argument("Hochster oracle is capped at m = " + std::to_string(options.cap) +
                                " (got m = " + std::to_string(m) + ")");
  }
  std::vector<FaceMask> subsets;
  subsets.reserve(std::size_t{1} << m);
  for (FaceMask w = 0; w < (FaceMask{1} << m); ++w) subsets.push_back(w);
  std::sort(subsets.begin(), subsets.end(), graded_mask_less);

  std::vector<std::vector<std::size_t>> cohomology(subsets.size());
  parallel_for(subsets.size(), options.jobs, [&](std::size_t n) {
    cohomology[n] = reduced_cohomology_dims(full_subcomplex(k, subsets[n]));
  });

  BettiTable table(m, static_cast<std::size_t>(m));
  for (std::size_t n = 0; n < subsets.size(); ++n) {
    const int j = std::popcount(subsets[n]);
    const auto& dims = cohomology[n];
    // dims[q + 1] = dim H̃^q, contributing to i = j - q - 1.
    for (std::size_t s = 0; s < dims.size(); ++s) {
      if (dims[s] == 0) continue;
      const int q = static_cast<int>(s) - 1;
      table.add(j - q - 1, static_cast<std::size_t>(j), dims[s]);
    }
  }
  return table;
}

}  // namespace tork
