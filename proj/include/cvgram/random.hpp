#pragma once

#include <random>
#include <vector>

#include "cvgram/core.hpp"

// Seeded data generation. The PRNG (mt19937_64) and the bit-to-double
// mapping are fixed so the same seed reproduces the same dataset and
// partitioning on any platform; std::uniform_real_distribution is avoided
// because its output is implementation-defined.

namespace cvgram {

/// Uniform double in [0, 1) from the top 53 bits of one 64-bit draw.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Row-major fill, X first then Y, from a single seeded stream.
inline DatasetPair random_dataset(Index n, Index k, Index m, std::mt19937_64& rng) {
  Matrix x(n, k), y(n, m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < k; ++j) x(i, j) = uniform01(rng);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j) y(i, j) = uniform01(rng);
  return DatasetPair(std::move(x), std::move(y));
}

inline DatasetPair random_dataset(Index n, Index k, Index m, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_dataset(n, k, m, rng);
}

/// Balanced labels 1 + (i mod p), then a Fisher-Yates shuffle driven by the
/// given stream. Every fold is nonempty, so the partitioning is always
/// valid, and it is scalable whenever N - ceil(N/p) >= 2.
inline Partitioning random_partitioning(Index n, int p, std::mt19937_64& rng) {
  Partitioning part;
  part.p = p;
  part.labels.resize(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i)
    part.labels[static_cast<size_t>(i)] = 1 + static_cast<int>(i % p);
  for (Index i = n - 1; i > 0; --i) {
    const auto j = static_cast<Index>(rng() % static_cast<uint64_t>(i + 1));
    std::swap(part.labels[static_cast<size_t>(i)],
              part.labels[static_cast<size_t>(j)]);
  }
  return part;
}

inline Partitioning random_partitioning(Index n, int p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_partitioning(n, p, rng);
}

}  // namespace cvgram
