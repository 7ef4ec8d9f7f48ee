#ifndef METALIE_SRC_PARALLEL_HPP_
#define METALIE_SRC_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace metalie::detail {

  // Calls fn(i) for i in [0, n) on up to `workers` threads. fn must only write
  // to slot i of its outputs.
  template <typename F>
  void parallel_for(std::size_t n, unsigned workers, F&& fn) {
    if (workers <= 1 || n < 2) {
      for (std::size_t i = 0; i < n; ++i) {
        fn(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    auto                     run = [&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
        }
      }
    };
    std::vector<std::thread> threads;
    unsigned const           count = std::min<std::size_t>(workers, n);
    threads.reserve(count);
    for (unsigned t = 0; t < count; ++t) {
      threads.emplace_back(run);
    }
    for (auto& t : threads) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace metalie::detail

#endif  // METALIE_SRC_PARALLEL_HPP_
