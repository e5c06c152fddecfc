#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gtlab {

/// Evaluates f(i) for i in [0, n) on up to `workers` threads (0 picks the
/// hardware concurrency) and returns the results in index order, so any
/// reduction over them is independent of scheduling.
template <typename F>
auto map_trials(std::int64_t n, F&& f, unsigned workers = 0) -> std::vector<decltype(f(std::int64_t{}))> {
  using T = decltype(f(std::int64_t{}));
  std::vector<T> out(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, std::max<std::int64_t>(n, 1)));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(i);
    return out;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::int64_t i = w; i < n; i += workers) out[static_cast<std::size_t>(i)] = f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace gtlab
