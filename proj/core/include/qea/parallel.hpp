#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace qea {

inline unsigned effective_workers(int workers, std::size_t count) {
  unsigned w = workers > 0 ? unsigned(workers) : std::thread::hardware_concurrency();
  if (w == 0) w = 1;
  if (count < w) w = unsigned(count ? count : 1);
  return w;
}

/// Run fn(begin, end) over a partition of [0, count) across workers.
/// Results must be merged order-independently by the caller.
inline void parallel_chunks(std::size_t count, int workers,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  unsigned w = effective_workers(workers, count);
  if (w <= 1) {
    fn(0, 0, count);
    return;
  }
  std::vector<std::thread> threads;
  std::size_t chunk = (count + w - 1) / w;
  for (unsigned t = 0; t < w; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = begin + chunk < count ? begin + chunk : count;
    if (begin >= end) break;
    threads.emplace_back([&, t, begin, end] { fn(t, begin, end); });
  }
  for (auto& th : threads) th.join();
}

}  // namespace qea
