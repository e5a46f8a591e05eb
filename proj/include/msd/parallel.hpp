#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace msd {

inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

/// Run fn(i) for i in [0, count) on `workers` threads with static striding.
/// Callers write results into per-index slots; reductions stay serial so the
/// outcome is identical for any worker count.
inline void parallel_for(long long count, int workers, const std::function<void(long long)>& fn) {
  const int w = resolve_workers(workers);
  if (w <= 1 || count < 2) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (int t = 0; t < w; ++t)
    pool.emplace_back([=, &fn] {
      for (long long i = t; i < count; i += w) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace msd
