#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace seesaw {

// Worker count: SEESAW_THREADS if set (>= 1), else hardware concurrency.
unsigned worker_count();

// Runs f(i) for i in [0, n) over contiguous chunks. Callers write results into
// per-index slots and reduce afterwards in ascending order, so output does not
// depend on the thread count.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  unsigned w = worker_count();
  if (w <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  if (w > n) w = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(w);
  std::size_t chunk = (n + w - 1) / w;
  for (unsigned t = 0; t < w; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &f] {
      for (std::size_t i = lo; i < hi; ++i) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace seesaw
