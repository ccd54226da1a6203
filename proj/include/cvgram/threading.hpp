#pragma once

#include <thread>
#include <vector>

namespace cvgram::detail {

// Runs fn(i) for i in [0, count) on up to n_threads workers. Each index is
// processed exactly once and writes only its own output slot, so results do
// not depend on the thread count.
template <typename Fn>
void parallel_for(int count, int n_threads, Fn&& fn) {
  if (n_threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  const int workers = std::min(n_threads, count);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace cvgram::detail
