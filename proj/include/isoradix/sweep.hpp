// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "isoradix/cache.hpp"
#include "isoradix/curve.hpp"

namespace isoradix {

struct SweepOptions {
  std::uint64_t seed = 0;
  int threads = 1;
  std::optional<std::filesystem::path> cache_dir;  // no caching when absent
};

// Traces at every good prime p <= B, compute-or-extend.  Work fans out
// across threads per prime; results land in per-prime slots and are merged
// in ascending p, so the output is identical for any thread count.  With a
// cache directory the entry is persisted append-only: raising B never
// rewrites existing rows.
CacheEntry sweep_traces(const RationalCurve& E, std::uint64_t B, const SweepOptions& opt);

// The cache may hold rows beyond the requested bound; callers slice.
std::vector<TraceRow> rows_up_to(const CacheEntry& entry, std::uint64_t B);

}  // namespace isoradix
