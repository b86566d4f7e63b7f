// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#include "isoradix/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "isoradix/lfunc.hpp"
#include "isoradix/primes.hpp"

namespace isoradix {

CacheEntry sweep_traces(const RationalCurve& E, std::uint64_t B, const SweepOptions& opt) {
  std::optional<TraceCache> cache;
  if (opt.cache_dir) cache.emplace(*opt.cache_dir);

  CacheEntry entry;
  entry.curve_key = E.key();
  if (cache) {
    if (auto existing = cache->load(entry.curve_key)) entry = std::move(*existing);
  }
  if (entry.B_max >= B) return entry;

  const std::uint64_t from = std::max<std::uint64_t>(entry.B_max, 4);  // new primes in (from, B]
  std::vector<std::uint64_t> todo;
  for (std::uint64_t p : sieve_primes(B))
    if (p > from && E.good_at(p)) todo.push_back(p);

  std::vector<std::int64_t> slots(todo.size());
  const int threads = std::max(1, opt.threads);
  if (threads == 1 || todo.size() < 2) {
    for (std::size_t i = 0; i < todo.size(); ++i) {
      const auto R = reduce(E, todo[i]);
      slots[i] = trace(*R, opt.seed);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&]() {
      try {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= todo.size()) return;
          const auto R = reduce(E, todo[i]);
          slots[i] = trace(*R, opt.seed);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lk(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(todo.size());
      }
    };
    std::vector<std::thread> pool;
    const int n = std::min<int>(threads, static_cast<int>(todo.size()));
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (std::size_t i = 0; i < todo.size(); ++i) entry.rows.push_back(TraceRow{todo[i], slots[i]});
  entry.B_max = std::max(entry.B_max, B);
  if (cache) cache->store(entry);
  return entry;
}

std::vector<TraceRow> rows_up_to(const CacheEntry& entry, std::uint64_t B) {
  std::vector<TraceRow> out;
  for (const TraceRow& r : entry.rows) {
    if (r.p > B) break;
    out.push_back(r);
  }
  return out;
}

}  // namespace isoradix
