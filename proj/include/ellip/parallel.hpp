#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ellip {

/// Worker count: ELLIP_THREADS when set (>= 1), otherwise the hardware
/// concurrency. Every parallel loop in the library writes to disjoint
/// locations, so results are identical for any worker count.
inline int max_workers() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("ELLIP_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<int>(std::min(v, 256L));
  }
  return hw;
}

/// Runs fn(i) for i in [0, count), splitting the range into contiguous
/// chunks, one per worker. fn must write only to locations owned by index i.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
  int workers = std::min(max_workers(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  int chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int lo = w * chunk;
    int hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ellip
