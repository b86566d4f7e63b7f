// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <optional>

#include "isoradix/errors.hpp"

namespace isoradix {

// Largest admissible field characteristic.  Products of two canonical
// elements then fit a 128-bit accumulator with headroom, so no
// multiple-precision arithmetic is ever needed in the counting loops.
inline constexpr std::uint64_t kMaxFieldPrime = (std::uint64_t{1} << 62) - 1;

// Arithmetic in F_p for an odd prime p, 5 <= p < 2^62.  Elements are
// canonical representatives in [0, p).  Construction runs a deterministic
// primality check, so a live PrimeField is always a valid field.  Immutable
// and safe to share across threads.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;  // no overflow: a, b < 2^62
    return s >= p_ ? s - p_ : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }

  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;

  // Throws InternalError on a == 0; never returns a wrong value.
  std::uint64_t inv(std::uint64_t a) const;

  // 0 iff a == 0, +1 iff a is a nonzero square, -1 otherwise.
  int legendre(std::uint64_t a) const;

  // Square root via Tonelli-Shanks with the smallest non-residue as the
  // auxiliary element.  Of the two roots {r, p-r} the even one is returned,
  // so the output is deterministic.  nullopt when a is a non-residue.
  std::optional<std::uint64_t> sqrt(std::uint64_t a) const;

  // Canonical representative of a signed value.
  std::uint64_t from_signed(std::int64_t v) const {
    const std::int64_t m = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p_) : m);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

}  // namespace isoradix
