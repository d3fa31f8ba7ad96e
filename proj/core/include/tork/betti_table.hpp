#pragma once

#include "tork/rational.hpp"

#include <cstddef>
#include <vector>

namespace tork {

// β^{-i,2j} for 0 <= i <= m, 0 <= j <= j_max. Reads outside that range are 0.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(int num_vars, std::size_t j_max);

  int num_vars() const { return m_; }
  std::size_t j_max() const { return j_max_; }

  std::size_t at(int i, std::size_t j) const;
  void set(int i, std::size_t j, std::size_t value);
  void add(int i, std::size_t j, std::size_t value);

  bool is_zero() const;

  // Tables are equal when they have the same m and agree on every entry,
  // regardless of j_max.
  friend bool operator==(const BettiTable& a, const BettiTable& b);

 private:
  std::size_t offset(int i, std::size_t j) const {
    return static_cast<std::size_t>(i) * (j_max_ + 1) + j;
  }

  int m_ = 0;
  std::size_t j_max_ = 0;
  std::vector<std::size_t> entries_ = std::vector<std::size_t>(1, 0);
};

// β^{-i} = Σ_j β^{-i,2j}, indexed i = 0..m.
std::vector<std::size_t> total_betti(const BettiTable& b);

// Σ_{i,j} β^{-i,2j}; for Q[K] this is dim H*(Z_K; Q).
std::size_t hrk(const BettiTable& b);

// p[k] = Σ_{2j - i = k} β^{-i,2j}, k = 0..2·j_max.
std::vector<std::size_t> poincare_vector(const BettiTable& b);

// max{ i : β^{-i} > 0 }. Throws std::invalid_argument on the zero table.
int projective_dimension(const BettiTable& b);

// Σ_i (-1)^i β^{-i}
long long euler_characteristic(const BettiTable& b);

// C(n, k) as an exact integer; zero when k < 0 or k > n.
Integer binomial(long n, long k);

}  // namespace tork
