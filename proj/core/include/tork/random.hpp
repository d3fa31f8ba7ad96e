#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace tork {

// Uniform draw from [0, n) by rejection; unlike std::uniform_int_distribution
// the sequence is the same for every standard library.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

inline bool coin(std::mt19937_64& rng, std::uint64_t numerator, std::uint64_t denominator) {
  return uniform_below(rng, denominator) < numerator;
}

}  // namespace tork
