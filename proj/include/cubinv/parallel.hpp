#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cubinv {

/// Upper bound on worker threads used by the library; 1 means run inline.
void set_max_jobs(unsigned jobs);
unsigned max_jobs();

namespace detail {
inline thread_local bool in_parallel_region = false;
}

/// Calls body(i) for every i < n. Iterations are handed out dynamically, so
/// callers must write results into per-index slots and combine them in index
/// order afterwards. The first exception thrown by any iteration is rethrown.
/// Nested calls from inside a worker run inline.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const unsigned jobs = max_jobs();
  if (jobs <= 1 || n <= 1 || detail::in_parallel_region) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    const bool outer = detail::in_parallel_region;
    detail::in_parallel_region = true;
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    detail::in_parallel_region = outer;
  };
  std::vector<std::thread> pool;
  const std::size_t count = std::min<std::size_t>(jobs, n);
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cubinv
