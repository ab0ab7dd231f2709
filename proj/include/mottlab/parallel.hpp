#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace mottlab {

/// Worker count: explicit request, else MOTTLAB_THREADS, else hardware.
inline int resolve_threads(int requested = 0) {
  if (const char* env = std::getenv("MOTTLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Static block partition of [0, count); fn(i) must be independent per index.
/// Results land in caller-owned storage, so output order never depends on
/// the thread count.
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t)>& fn) {
  threads = resolve_threads(threads);
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t n_workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (std::size_t w = 0; w < n_workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < count; i += n_workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace mottlab
