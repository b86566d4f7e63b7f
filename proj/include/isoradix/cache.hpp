// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "isoradix/hash.hpp"

namespace isoradix {

struct TraceRow {
  std::uint64_t p = 0;
  std::int64_t a = 0;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

// Persistent trace table for one curve identity.  rows cover every good
// prime p <= B_max, strictly ascending; raising B_max only appends.
struct CacheEntry {
  Digest128 curve_key;
  std::uint64_t B_max = 0;
  std::vector<TraceRow> rows;
};

// One binary file per curve key:
//   "ISORADIX1" | B_max u64 | count u64 | count × (p u64, a i64) | fnv1a u64
// all little-endian, checksum over every preceding byte.  A file that fails
// the magic or checksum is quarantined (renamed *.corrupt) and treated as
// missing, so the entry is recomputed rather than trusted.
class TraceCache {
 public:
  explicit TraceCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(const Digest128& key) const;

  std::optional<CacheEntry> load(const Digest128& key) const;

  // Write-then-rename: readers never observe a partial file.
  void store(const CacheEntry& entry) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace isoradix
