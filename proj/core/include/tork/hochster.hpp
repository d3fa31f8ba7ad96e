#pragma once

#include "tork/betti_table.hpp"
#include "tork/simplicial_complex.hpp"

namespace tork {

inline constexpr int kDefaultHochsterCap = 12;

struct HochsterOptions {
  int cap = kDefaultHochsterCap;
  unsigned jobs = 1;  // 0 means hardware concurrency
};

// Betti numbers of Q[K] from full subcomplexes:
//   β^{-i,2j} = Σ_{|W| = j} dim H̃^{j-i-1}(K_W; Q),
// with H̃^{-1}({∅}) = Q. Subsets W are visited by size, then numeric mask.
// The table has j_max = m, matching stanley_reisner_betti. Throws
// std::invalid_argument if m exceeds the cap.
BettiTable hochster_betti(const SimplicialComplex& k, const HochsterOptions& options = {});

}  // namespace tork
