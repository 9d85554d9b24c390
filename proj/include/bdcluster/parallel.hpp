#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bdc {

// Worker count from BD_CLUSTER_THREADS, else the hardware concurrency.
int worker_count();

// Runs body(i) for i in [0, count). Each index is visited exactly once, so
// results written to per-index slots are deterministic.
template <typename Body>
void parallel_for(std::size_t count, Body body) {
  int workers = worker_count();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  std::size_t spawn = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  for (std::size_t w = 1; w < spawn; ++w) threads.emplace_back(run);
  run();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace bdc
