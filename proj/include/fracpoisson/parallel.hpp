#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fracpoisson {

/// Calls fn(i) for i in [0, n) on up to `jobs` threads. Indices are handed out
/// in contiguous blocks; fn must write only to slot i of any shared output so
/// that results never depend on the thread count.
template <class Fn>
void parallel_for_index(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(jobs, n);
  const std::size_t block = (n + workers - 1) / workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = w * block;
      const std::size_t hi = std::min(n, lo + block);
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace fracpoisson
