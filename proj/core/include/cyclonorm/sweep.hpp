#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <thread>
#include <vector>

namespace cyclonorm {

/// Runs work(item) for every item on up to `jobs` threads and hands the
/// results to emit(item, result) in input order, one chunk at a time, so
/// output is identical for any job count. An exception thrown by work is
/// rethrown from the calling thread when its item comes up for emission.
template <class In, class Work, class Emit>
void ordered_parallel_for(std::span<const In> items, unsigned jobs, Work&& work, Emit&& emit,
                          std::size_t chunk = 64) {
  using Out = decltype(work(items.front()));
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    for (const auto& item : items) emit(item, work(item));
    return;
  }
  chunk = std::max<std::size_t>(chunk, jobs);
  for (std::size_t base = 0; base < items.size(); base += chunk) {
    const std::size_t count = std::min(chunk, items.size() - base);
    std::vector<std::optional<Out>> results(count);
    std::vector<std::exception_ptr> errors(count);
    {
      std::vector<std::jthread> pool;
      pool.reserve(jobs);
      for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < count; i += jobs) {
            try {
              results[i].emplace(work(items[base + i]));
            } catch (...) {
              errors[i] = std::current_exception();
            }
          }
        });
      }
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      emit(items[base + i], std::move(*results[i]));
    }
  }
}

}  // namespace cyclonorm
