#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace motifgraphs {

// Worker count for internal parallel loops; MOTIFGRAPH_THREADS overrides
// hardware_concurrency. Results never depend on this value: workers write to
// preallocated per-index slots and reductions run in index order.
unsigned worker_count();

// Static range split of [0, n) into contiguous chunks, chunk_fn(begin, end).
template <class F>
void parallel_for(std::size_t n, F&& chunk_fn) {
  if (n == 0) return;
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    chunk_fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, w, begin, end] {
      try {
        chunk_fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace motifgraphs
