// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <initializer_list>

namespace isoradix {

// splitmix64 step (Steele/Lea/Flood).  Used both as the project RNG core and
// as the seed mixer, so that every random choice is a pure function of the
// caller-provided seed regardless of compiler or platform.  std::
// distributions are avoided on purpose: their output is not pinned by the
// standard.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, n) by rejection; n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % n;
  }

  bool coin() { return (next_u64() & 1) != 0; }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed from a base seed and a few labels
// (curve key words, prime, ...).  Order-sensitive.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> words) {
  std::uint64_t state = 0x243f6a8885a308d3ULL;  // arbitrary fixed offset
  for (std::uint64_t w : words) {
    state ^= w;
    (void)splitmix64(state);
  }
  return state;
}

}  // namespace isoradix
