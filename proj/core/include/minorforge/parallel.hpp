#ifndef MINORFORGE_PARALLEL_HPP
#define MINORFORGE_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace minorforge {

// Runs fn(trial) for trial in [0, trials). Trials are embarrassingly
// parallel: each writes only its own slot of any result vector, so the
// outcome is identical for every thread count. The first exception thrown
// by a worker is rethrown after all workers join.
template <typename F>
void for_each_trial(long trials, int threads, F fn) {
  if (threads <= 1 || trials <= 1) {
    for (long t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::atomic<long> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  const int nt = static_cast<int>(std::min<long>(threads, trials));
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int i = 0; i < nt; ++i)
    pool.emplace_back([&] {
      for (;;) {
        long t = next.fetch_add(1);
        if (t >= trials || failed.load()) break;
        try {
          fn(t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          failed.store(true);
          break;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace minorforge

#endif
