#pragma once

#include "tork/betti_table.hpp"
#include "tork/graded_module.hpp"
#include "tork/simplicial_complex.hpp"
#include "tork/sparse_matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tork {

// Strand j of M ⊗ Λ(u_1..u_m): C^{-i} = M_{j-i} ⊗ Λ^i for i = 0..min(j, m).
// u_i has bidegree (-1, 2), so d preserves j.
//
// Basis of C^{-i}: pairs (S, b) with S an i-subset of [m] in lexicographic
// order of its sorted elements and b a basis index of M_{j-i}; the flat index
// is rank(S) * dim(M_{j-i}) + b.
struct KoszulStrand {
  std::size_t j = 0;
  std::vector<std::size_t> dims;  // dims[i] = dim C^{-i}
  // d[i] : C^{-i} -> C^{-(i-1)} for i = 1..dims.size()-1; d[0] is the zero
  // map C^0 -> 0.
  std::vector<SparseMatrix> d;
};

// Throws std::invalid_argument if validate(module) is not empty.
KoszulStrand strand(const GradedModule& module, std::size_t j);

// True iff d[i] ∘ d[i+1] = 0 exactly for every i.
bool differentials_square_to_zero(const KoszulStrand& s);

struct KoszulOptions {
  // Worker threads for independent strands; 0 means hardware concurrency.
  unsigned jobs = 1;
  // Check d ∘ d = 0 on every strand; a failure throws std::logic_error.
  bool verify_dd = true;
};

// β^{-i,2j} = nullity(d_i) - rank(d_{i+1}) for j = 0..j_max. When j_max is
// absent it defaults to top level + m, past which every strand is exact.
// Throws std::invalid_argument on an invalid module.
BettiTable betti_table(const GradedModule& module, std::optional<std::size_t> j_max = {},
                       const KoszulOptions& options = {});

// Complete Betti table of Q[K]: the module truncated at level m, strands
// j = 0..m.
BettiTable stanley_reisner_betti(const SimplicialComplex& k, const KoszulOptions& options = {});

}  // namespace tork
