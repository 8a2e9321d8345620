// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include "polsar/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace polsar {

void parallel_for(int n, int threads,
                  const std::function<void(int begin, int end)>& chunk_fn) {
  if (n <= 0) return;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = std::min(threads, n);
  if (threads == 1) {
    chunk_fn(0, n);
    return;
  }

  // Fixed chunk boundaries: ceil(n / threads) per worker.
  const int chunk = (n + threads - 1) / threads;
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads) - 1);
  std::exception_ptr error;
  std::mutex error_mutex;

  auto run = [&](int begin, int end) {
    try {
      chunk_fn(begin, end);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  for (int t = 1; t < threads; ++t) {
    const int begin = t * chunk;
    const int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back(run, begin, end);
  }
  run(0, std::min(chunk, n));
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace polsar
