#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace wlem::detail {

/// Evaluates fn(0), fn(1), ... and returns the hit with the smallest index,
/// or nullopt. With jobs > 1 items are handed out to worker threads; items
/// past an already-found hit are skipped, so the result does not depend on
/// the number of jobs.
template <class Fn>
auto first_hit(std::size_t items, unsigned jobs, Fn fn)
    -> std::optional<std::pair<std::size_t, typename std::invoke_result_t<Fn, std::size_t>::value_type>> {
  using Hit = typename std::invoke_result_t<Fn, std::size_t>::value_type;
  if (jobs <= 1 || items <= 1) {
    for (std::size_t i = 0; i < items; ++i) {
      if (auto hit = fn(i)) return std::make_pair(i, std::move(*hit));
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_index{items};
  std::optional<Hit> best;
  std::exception_ptr error;
  std::size_t error_index = items;
  std::mutex mu;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items || i >= best_index.load()) return;
      try {
        auto hit = fn(i);
        if (!hit) continue;
        std::lock_guard lock(mu);
        if (i < best_index.load()) {
          best_index.store(i);
          best = std::move(hit);
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
        // stop handing out further items
        next.store(items);
      }
    }
  };

  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(jobs, items);
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  if (error && error_index < best_index.load()) std::rethrow_exception(error);
  if (!best) return std::nullopt;
  return std::make_pair(best_index.load(), std::move(*best));
}

}  // namespace wlem::detail
