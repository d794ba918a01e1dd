#pragma once

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace irsfso {

// Default worker count: IRSFSO_THREADS if set, otherwise the hardware count.
inline int default_worker_count() {
  if (const char* env = std::getenv("IRSFSO_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(begin, end) over contiguous chunks of [0, n). The partition depends
// only on (n, workers); with workers == 1 everything runs inline.
template <class Fn>
void parallel_chunks(std::size_t n, int workers, const Fn& fn) {
  if (n == 0) return;
  if (workers < 1) workers = 1;
  const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  if (nw == 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(nw);
  const std::size_t chunk = (n + nw - 1) / nw;
  for (std::size_t w = 0; w < nw; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace irsfso
