#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fracalc {

/// Worker count: FRACALC_THREADS if set and positive, else the hardware
/// concurrency, else 1.
inline int thread_count() {
  if (const char* env = std::getenv("FRACALC_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

/// Runs body(i) for i in [0, n) across thread_count() threads. Indices are
/// handed out in chunks; the first exception thrown by any worker is
/// rethrown on the caller.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  const std::size_t nt =
      std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  constexpr std::size_t kChunk = 16;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::mutex error_mtx;
  auto worker = [&] {
    for (;;) {
      const std::size_t lo = next.fetch_add(kChunk);
      if (lo >= n || failed.load(std::memory_order_relaxed)) return;
      const std::size_t hi = std::min(lo + kChunk, n);
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mtx);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(nt - 1);
  for (std::size_t t = 1; t < nt; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace fracalc
