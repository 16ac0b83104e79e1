// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_SRC_PARALLEL_HPP
#define PEERSEL_SRC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace peersel::detail {

/// Worker cap: PEERSEL_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
int worker_count();

/// Calls fn(chunk) for every chunk in [0, chunks) on up to worker_count()
/// threads, or `max_workers` when positive and smaller. Callers store per-chunk results and merge them in chunk order,
/// so output never depends on scheduling. The first exception is rethrown.
template <class Fn>
void for_each_chunk(std::size_t chunks, Fn&& fn, int max_workers = 0) {
  int cap = worker_count();
  if (max_workers > 0) cap = std::min(cap, max_workers);
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(cap), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) {
        try {
          fn(c);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = chunks;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace peersel::detail

#endif  // PEERSEL_SRC_PARALLEL_HPP
