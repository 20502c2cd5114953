#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace mqed {

// Worker count: MQED_THREADS when set to a positive integer, else the
// hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("MQED_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = f(i) for i in [0, n), evaluated on a pool of workers. Output order
/// follows the input index; the first exception (by index) is rethrown.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, F&& f, unsigned threads = worker_count()) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned pool = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), n));
  if (pool <= 1) {
    work();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(pool);
    for (unsigned t = 0; t < pool; ++t) workers.emplace_back(work);
    for (auto& w : workers) w.join();
  }
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace mqed
