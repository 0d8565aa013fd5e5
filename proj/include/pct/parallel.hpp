#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace pct {

/// Worker count: hardware concurrency, capped by the PCT_THREADS environment
/// variable when set to a positive integer.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to `workers` threads. Tasks are
/// claimed dynamically; body must be safe to call concurrently for distinct i.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  std::vector<std::jthread> pool;
  const std::size_t spawn = std::min<std::size_t>(workers, count) - 1;
  pool.reserve(spawn);
  for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(run);
  run();
}

}  // namespace pct
