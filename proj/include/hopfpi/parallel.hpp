#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace hopfpi {

// Worker count for block-parallel checks: HOPFPI_THREADS when set (>= 1),
// otherwise the hardware concurrency.
inline int worker_count() {
  if (const char* env = std::getenv("HOPFPI_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs the tasks across workers; results land at their task's index, so the
// caller's merge order (and any report it builds) is deterministic.  The
// first task exception, in index order, is rethrown.
template <class R>
std::vector<R> run_tasks(std::vector<std::function<R()>> tasks) {
  std::vector<R> results(tasks.size());
  const int workers = std::min<int>(worker_count(), static_cast<int>(tasks.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<size_t> next{0};
  auto body = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace hopfpi
