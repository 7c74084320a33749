#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace aic {

inline unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(first, last) over contiguous index blocks, one block per worker.
/// Callers own determinism: each index must derive its own RNG substream and
/// workers must write to disjoint slots (reductions happen afterwards in
/// index order).
template <typename Fn>
void parallel_blocks(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || count <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t first = w * chunk;
    const std::size_t last = std::min(count, first + chunk);
    if (first >= last) break;
    pool.emplace_back([&fn, first, last] { fn(first, last); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace aic
