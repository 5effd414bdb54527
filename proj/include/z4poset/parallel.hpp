#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace z4poset::detail {

/// Splits [0, total) into `jobs` contiguous ranges and runs fn(begin, end, worker)
/// on each, one thread per range. Worker 0 runs on the calling thread.
/// The first exception thrown by any worker is rethrown after all joined.
template <class Fn>
void parallel_ranges(std::uint64_t total, unsigned jobs, Fn&& fn) {
  jobs = std::max(1U, jobs);
  if (total < jobs) jobs = static_cast<unsigned>(std::max<std::uint64_t>(1, total));
  const std::uint64_t chunk = total / jobs;
  const std::uint64_t extra = total % jobs;
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  auto bounds = [&](unsigned w) {
    const std::uint64_t begin = w * chunk + std::min<std::uint64_t>(w, extra);
    return std::pair{begin, begin + chunk + (w < extra ? 1 : 0)};
  };
  auto run = [&](unsigned w) {
    try {
      auto [b, e] = bounds(w);
      fn(b, e, w);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  for (unsigned w = 1; w < jobs; ++w) threads.emplace_back(run, w);
  run(0);
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace z4poset::detail
