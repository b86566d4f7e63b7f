// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#include "isoradix/modarith.hpp"

#include <string>

#include "isoradix/primes.hpp"

namespace isoradix {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 5 || p > kMaxFieldPrime)
    throw UserError("field characteristic " + std::to_string(p) + " out of range [5, 2^62)");
  if (!is_prime_u64(p)) throw UserError("field characteristic " + std::to_string(p) + " is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const {
  std::uint64_t acc = 1;
  std::uint64_t sq = base % p_;
  while (exp != 0) {
    if (exp & 1) acc = mul(acc, sq);
    sq = mul(sq, sq);
    exp >>= 1;
  }
  return acc;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a == 0) throw InternalError("PrimeField::inv: zero is not invertible");
  // Extended Euclid; Bezout coefficients stay below p in magnitude.
  std::int64_t t = 0;
  std::int64_t new_t = 1;
  std::uint64_t r = p_;
  std::uint64_t new_r = a;
  while (new_r != 0) {
    const std::uint64_t q = r / new_r;
    const std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
    t = new_t;
    new_t = tmp_t;
    const std::uint64_t tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p_)) : static_cast<std::uint64_t>(t);
}

int PrimeField::legendre(std::uint64_t a) const {
  if (a == 0) return 0;
  const std::uint64_t e = pow(a, (p_ - 1) / 2);
  return e == 1 ? 1 : -1;
}

std::optional<std::uint64_t> PrimeField::sqrt(std::uint64_t a) const {
  if (a == 0) return 0;
  if (legendre(a) != 1) return std::nullopt;

  std::uint64_t r;
  if (p_ % 4 == 3) {
    r = pow(a, (p_ + 1) / 4);
  } else {
    // Tonelli-Shanks.  p - 1 = q * 2^s with q odd.
    std::uint64_t q = p_ - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    std::uint64_t z = 2;
    while (legendre(z) != -1) ++z;  // smallest non-residue

    std::uint64_t c = pow(z, q);
    std::uint64_t t = pow(a, q);
    r = pow(a, (q + 1) / 2);
    unsigned m = s;
    while (t != 1) {
      std::uint64_t t2 = t;
      unsigned i = 0;
      while (t2 != 1) {
        t2 = mul(t2, t2);
        ++i;
      }
      std::uint64_t b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
  }
  if (r % 2 != 0) r = p_ - r;  // pick the even root of {r, p - r}
  return r;
}

}  // namespace isoradix
