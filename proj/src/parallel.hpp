#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace vml::detail {

/// Runs fn(i) for i in [0, count) and returns the result of the smallest i
/// for which fn produced a value. Indices above the current best are skipped,
/// so the answer is the same for every thread count.
template <class Result, class Fn>
std::optional<Result> first_hit(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i)
      if (auto r = fn(i)) return r;
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex mu;
  std::optional<Result> best_result;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > best.load()) return;
      if (auto r = fn(i)) {
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best.store(i);
          best_result = std::move(r);
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned n = std::min<std::size_t>(threads, count);
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  pool.clear();
  return best_result;
}

/// Applies fn(i) to every i in [0, count) across `threads` workers.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::jthread> pool;
  const unsigned n = std::min<std::size_t>(threads, count);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
}

}  // namespace vml::detail
