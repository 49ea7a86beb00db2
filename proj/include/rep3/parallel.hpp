#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rep3 {

inline int default_jobs() {
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

/// Evaluates fn(i) for i in [0, count) on `jobs` threads and returns the
/// results in index order, so the output never depends on scheduling.
/// The first exception thrown by any worker is rethrown.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, int jobs, Fn&& fn) {
  std::vector<T> out(count);
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    const auto nworkers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    for (std::size_t w = 0; w < nworkers; ++w) {
      workers.emplace_back([&] {
        while (true) {
          const std::size_t begin = next.fetch_add(kChunk);
          if (begin >= count) return;
          const std::size_t end = std::min(count, begin + kChunk);
          try {
            for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(count);
            return;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace rep3
