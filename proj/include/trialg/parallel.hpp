#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace trialg {

/// Worker count: an explicit request wins, then TRIALG_JOBS, then 1.
inline unsigned resolve_jobs(unsigned requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TRIALG_JOBS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
    } catch (...) {
    }
  }
  return 1;
}

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Work is handed out in
/// a fixed stride so each index runs exactly once; callers store results by
/// index to keep output independent of the worker count. The first
/// exception thrown by any task is rethrown.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += jobs) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace trialg
