#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace tel {

// Worker count for family sweeps. TEL_THREADS bounds it when set.
inline int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  int n = hw ? static_cast<int>(hw) : 1;
  if (const char* env = std::getenv("TEL_THREADS")) {
    int m = std::atoi(env);
    if (m >= 1 && m < n) n = m;
  }
  return n;
}

// Runs fn(i) for i in [0, n). Each call writes only to its own output slot,
// so the result is identical regardless of the worker count.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
  int workers = worker_count();
  if (workers > n) workers = n;
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace tel
