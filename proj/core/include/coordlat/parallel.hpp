#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace coordlat {

/// Worker cap: COORDLAT_MAX_PARALLELISM if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
std::size_t max_parallelism();

/// Number of chunks parallel_chunks will use for n items.
std::size_t chunk_count(std::size_t n, std::size_t min_chunk = 256);

/// Calls fn(begin, end, worker) over disjoint chunks of [0, n). Chunks are
/// contiguous and numbered by worker, so callers that keep per-worker
/// results and concatenate them in worker order get scan-order output.
template <class Fn>
void parallel_chunks(std::size_t n, Fn&& fn, std::size_t min_chunk = 256) {
  const std::size_t workers = chunk_count(n, min_chunk);
  if (workers <= 1) {
    fn(std::size_t{0}, n, std::size_t{0});
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t step = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * step;
    const std::size_t end = std::min(n, begin + step);
    threads.emplace_back([&, begin, end, w] {
      try {
        if (begin < end) fn(begin, end, w);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace coordlat
