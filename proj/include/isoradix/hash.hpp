// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace isoradix {

// 128-bit content digest.  Stable across runs and platforms; used as the
// cache key for a curve's (a, b) pair.
struct Digest128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend bool operator==(const Digest128&, const Digest128&) = default;

  std::string hex() const;
};

// MurmurHash3 x64 128 (Appleby, public domain), fixed seed 0.
Digest128 murmur3_128(std::string_view data);

}  // namespace isoradix
