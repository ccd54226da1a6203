#pragma once

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>

#include "cvgram/core.hpp"

namespace cvgram {

/// One timing measurement; wall_time is the minimum over repetitions.
struct BenchRecord {
  std::string engine;  // "baseline" or "fast"
  PreprocessConfig config;
  Index n = 0;
  Index k = 0;
  Index m = 0;
  int p = 0;
  double wall_time = 0.0;  // seconds
  int reps = 0;
};

/// Minimum wall time over reps runs of fn (monotonic clock).
template <typename Fn>
double min_wall_time(int reps, Fn&& fn) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(stop - start).count());
  }
  return best;
}

}  // namespace cvgram
