#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace biaslab {

// Runs fn(i) for i in [begin, end), split into contiguous chunks across
// `threads` workers. Callers keep determinism by writing to per-index slots.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, int threads, Fn&& fn) {
  const std::size_t count = end > begin ? end - begin : 0;
  if (threads <= 1 || count < 2) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = begin + count * w / workers;
      const std::size_t hi = begin + count * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace biaslab
