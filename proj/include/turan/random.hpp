#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace turan {

// std::mt19937_64 output is fixed by the standard; the distributions in <random> are not,
// so draws go through these helpers to stay identical across standard libraries.

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Fisher-Yates permutation of 0..n-1.
template <class T>
std::vector<T> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<T> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<T>(i);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace turan
