#pragma once

#include "tork/simplicial_complex.hpp"
#include "tork/sparse_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tork {

// Exponent vector of a monomial in v_1..v_m.
using Exponent = std::vector<unsigned>;

// Degree-t monomials on m variables, the basis order used by every builder:
// decreasing lexicographic on exponent vectors with v_1 most significant
// (degree 2 on two variables gives v1², v1·v2, v2²).
std::vector<Exponent> monomials_of_degree(int num_vars, unsigned degree);

// Finite-dimensional graded module over S(m) = Q[v_1..v_m], deg v_i = 2.
// Level t holds the component in topological degree 2t; multiplication by
// v_i maps level t to level t + 1 and acts as zero on the top level.
//
// Construction only checks that the operator table has the right number of
// slots; shape and commutativity are reported by validate().
class GradedModule {
 public:
  GradedModule() = default;

  // mult[i][t] is v_{i+1}: M_t -> M_{t+1}, for t = 0..levels-2.
  GradedModule(int num_vars, std::vector<std::size_t> level_dims,
               std::vector<std::vector<SparseMatrix>> mult);

  // The residue field Q in level 0.
  static GradedModule residue_field(int num_vars);

  int num_vars() const { return m_; }
  std::size_t num_levels() const { return dims_.size(); }
  const std::vector<std::size_t>& level_dims() const { return dims_; }

  // Zero outside 0..num_levels()-1.
  std::size_t dim(std::size_t level) const { return level < dims_.size() ? dims_[level] : 0; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  // Highest level with nonzero dimension. Throws std::logic_error on the zero module.
  std::size_t top_level() const;

  // var is 0-based; level < num_levels() - 1.
  const SparseMatrix& mult(int var, std::size_t level) const;

  friend bool operator==(const GradedModule& a, const GradedModule& b) {
    return a.m_ == b.m_ && a.dims_ == b.dims_ && a.mult_ == b.mult_;
  }

 private:
  int m_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<SparseMatrix>> mult_;
};

struct ModuleViolation {
  enum class Kind { Shape, Commutativity };
  Kind kind;
  int var_i;          // 1-based
  int var_j;          // 1-based; equals var_i for shape violations
  std::size_t level;
  std::string message;
};

// Empty iff every operator has shape dim(M_{t+1}) x dim(M_t) and
// V_j[t+1]·V_i[t] = V_i[t+1]·V_j[t] for all i < j and t.
std::vector<ModuleViolation> validate(const GradedModule& module);

// Levels 0..t_max of Q[K] = S(m)/I_SR: monomials supported on faces of K.
// Throws std::invalid_argument if t_max < 1.
GradedModule stanley_reisner(const SimplicialComplex& k, std::size_t t_max);

// Levels 0..t_max of S(m)/(generators). Throws std::invalid_argument on a zero
// or wrong-length exponent vector.
GradedModule monomial_quotient(int num_vars, const std::vector<Exponent>& generators,
                               std::size_t t_max);

// hom_Q(M, Q) with levels reversed so that the top nonzero level of M becomes
// level 0; operators are the transposes of those of M.
GradedModule dual_module(const GradedModule& module);

// Reproducible random finite-dimensional module with a one-dimensional
// level 0: a truncated random monomial quotient, optionally divided by the
// submodule generated by a random element of a high level, optionally with a
// random change of basis. Throws std::invalid_argument if max_level < 1.
GradedModule random_artinian_module(int num_vars, std::uint64_t seed, std::size_t max_level);

}  // namespace tork
