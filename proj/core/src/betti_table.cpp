#include "tork/betti_table.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tork {

BettiTable::BettiTable(int num_vars, std::size_t j_max)
    : m_(num_vars), j_max_(j_max),
      entries_(static_cast<std::size_t>(num_vars + 1) * (j_max + 1), 0) {
  if (num_vars < 0) throw std::invalid_argument("negative number of variables");
}

std::size_t BettiTable::at(int i, std::size_t j) const {
  if (i < 0 || i > m_ || j > j_max_) return 0;
  return entries_[offset(i, j)];
}

void BettiTable::set(int i, std::size_t j, std::size_t value) {
  if (i < 0 || i > m_ || j > j_max_) {
    throw std::out_of_range("Betti entry (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside the table");
  }
  entries_[offset(i, j)] = value;
}

void BettiTable::add(int i, std::size_t j, std::size_t value) { set(i, j, at(i, j) + value); }

bool BettiTable::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::size_t x) { return x == 0; });
}

bool operator==(const BettiTable& a, const BettiTable& b) {
  if (a.m_ != b.m_) return false;
  const std::size_t j_max = std::max(a.j_max_, b.j_max_);
  for (int i = 0; i <= a.m_; ++i) {
    for (std::size_t j = 0; j <= j_max; ++j) {
      if (a.at(i, j) != b.at(i, j)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> total_betti(const BettiTable& b) {
  std::vector<std::size_t> out(static_cast<std::size_t>(b.num_vars() + 1), 0);
  for (int i = 0; i <= b.num_vars(); ++i) {
    for (std::size_t j = 0; j <= b.j_max(); ++j) out[static_cast<std::size_t>(i)] += b.at(i, j);
  }
  return out;
}

std::size_t hrk(const BettiTable& b) {
  std::size_t total = 0;
  for (auto x : total_betti(b)) total += x;
  return total;
}

std::vector<std::size_t> poincare_vector(const BettiTable& b) {
  std::vector<std::size_t> out(2 * b.j_max() + 1, 0);
  for (int i = 0; i <= b.num_vars(); ++i) {
    for (std::size_t j = 0; j <= b.j_max(); ++j) {
      const std::size_t value = b.at(i, j);
      if (value == 0) continue;
      // Nonzero entries satisfy i <= j for every module we build; a nonzero
      // entry with 2j < i has no topological degree.
      if (2 * j < static_cast<std::size_t>(i)) {
        throw std::logic_error("Betti entry with negative topological degree");
      }
      out[2 * j - static_cast<std::size_t>(i)] += value;
    }
  }
  return out;
}

int projective_dimension(const BettiTable& b) {
  const auto totals = total_betti(b);
  for (std::size_t i = totals.size(); i-- > 0;) {
    if (totals[i] != 0) return static_cast<int>(i);
  }
  throw std::invalid_argument("projective dimension of the zero table");
}

long long euler_characteristic(const BettiTable& b) {
  long long chi = 0;
  const auto totals = total_betti(b);
  for (std::size_t i = 0; i < totals.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(totals[i]);
  }
  return chi;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace tork
