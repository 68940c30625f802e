#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace qnoise {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

/// Static contiguous partition of [0, n) across worker threads. The first
/// exception thrown by any worker is rethrown on the caller thread.
template <class Fn>
void parallel_for_index(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::min<std::size_t>(resolve_threads(threads), n == 0 ? 1 : n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

/// Parallel map with an ordered reduction: gen(k) runs on worker threads,
/// consume(k, value) runs on the caller thread in ascending k. Results are
/// therefore independent of the thread count.
template <class T, class Gen, class Consume>
void ordered_parallel_map(std::size_t n, unsigned threads, Gen&& gen, Consume&& consume) {
  const std::size_t block =
      std::max<std::size_t>(std::size_t{4} * resolve_threads(threads), 1);
  std::vector<std::optional<T>> buffer(std::min(block, n));
  for (std::size_t start = 0; start < n; start += block) {
    const std::size_t count = std::min(block, n - start);
    parallel_for_index(count, threads,
                       [&](std::size_t b) { buffer[b].emplace(gen(start + b)); });
    for (std::size_t b = 0; b < count; ++b) {
      consume(start + b, std::move(*buffer[b]));
      buffer[b].reset();
    }
  }
}

}  // namespace qnoise
