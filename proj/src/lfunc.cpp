// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#include "isoradix/lfunc.hpp"

#include <cassert>

#include "isoradix/primes.hpp"

namespace isoradix {

namespace {

bool hasse_ok(std::int64_t a, std::uint64_t q) {
  return static_cast<unsigned __int128>(a < 0 ? -a : a) * static_cast<std::uint64_t>(a < 0 ? -a : a) <=
         static_cast<unsigned __int128>(4) * q;
}

}  // namespace

std::int64_t trace(const ReducedCurve& E, std::uint64_t seed) {
  const std::uint64_t p = E.F.p();
  const std::uint64_t N = group_order(E, seed);
  const std::int64_t a = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(N);
  assert(hasse_ok(a, p));
  return a;
}

LPoly lpoly(std::int64_t a, std::uint64_t p) {
  if (!hasse_ok(a, p))
    throw UserError("trace a = " + std::to_string(a) + " violates the Hasse bound at p = " + std::to_string(p));
  return LPoly{1, -a, static_cast<std::int64_t>(p)};
}

LocalLData count_extension(std::int64_t a, std::uint64_t p, int k) {
  if (k < 1 || k > kMaxExtensionDegree)
    throw UserError("extension degree k = " + std::to_string(k) + " out of range [1, " +
                    std::to_string(kMaxExtensionDegree) + "]");
  if (!hasse_ok(a, p))
    throw UserError("trace a = " + std::to_string(a) + " violates the Hasse bound at p = " + std::to_string(p));
  // p^k must stay below 2^62.
  std::uint64_t pk = 1;
  for (int j = 0; j < k; ++j) {
    if (pk > (std::uint64_t{1} << 62) / p)
      throw UserError("p^k overflows: p = " + std::to_string(p) + ", k = " + std::to_string(k) +
                      " exceeds the 2^62 working range");
    pk *= p;
  }
  // t_0 = 2, t_1 = a, t_j = a·t_{j-1} - p·t_{j-2}; |t_j| <= 2·p^{j/2} keeps
  // every intermediate far below the int64 range.
  std::int64_t t_prev = 2;
  std::int64_t t = a;
  for (int j = 2; j <= k; ++j) {
    const std::int64_t next = a * t - static_cast<std::int64_t>(p) * t_prev;
    t_prev = t;
    t = next;
  }
  LocalLData d;
  d.p = p;
  d.k = k;
  d.a = a;
  d.t_k = t;
  d.N_k = static_cast<std::uint64_t>(static_cast<std::int64_t>(pk + 1) - t);
  assert(hasse_ok(t, pk));
  assert(d.N_k > 0);
  assert(d.N_k % static_cast<std::uint64_t>(static_cast<std::int64_t>(p + 1) - a) == 0);  // E(F_p) <= E(F_{p^k})
  return d;
}

ReductionClass classify(const LocalLData& d) {
  if (d.t_k % static_cast<std::int64_t>(d.p) != 0) return ReductionClass::Ordinary;
  if (d.t_k == 0) return ReductionClass::SupersingularZero;
  std::uint64_t pk = 1;
  for (int j = 0; j < d.k; ++j) pk *= d.p;
  const std::uint64_t abs_t = static_cast<std::uint64_t>(d.t_k < 0 ? -d.t_k : d.t_k);
  if (static_cast<unsigned __int128>(abs_t) * abs_t == pk) return ReductionClass::SupersingularRoot;
  const std::uint64_t r = isqrt_u64(pk);
  if (r * r == pk && abs_t == 2 * r) return ReductionClass::SupersingularTwice;
  throw InternalError("classify: p | t_k but no Waterhouse case matches (t_k = " + std::to_string(d.t_k) +
                      ", p^k = " + std::to_string(pk) + ")");
}

std::string reduction_class_name(ReductionClass c) {
  return c == ReductionClass::Ordinary ? "ordinary" : "supersingular";
}

FrobeniusField frobenius_field_disc(std::int64_t a, std::uint64_t p) {
  if (!hasse_ok(a, p))
    throw UserError("trace a = " + std::to_string(a) + " violates the Hasse bound at p = " + std::to_string(p));
  const std::int64_t delta = a * a - 4 * static_cast<std::int64_t>(p);
  if (delta == 0) return FrobeniusField{true, 0};
  // Squarefree part (with sign), then the usual 0/1 mod 4 adjustment.
  std::uint64_t abs_delta = static_cast<std::uint64_t>(-delta);
  std::int64_t s = -1;
  for (const auto& [q, e] : factorize_u64(abs_delta))
    if (e % 2 != 0) s *= static_cast<std::int64_t>(q);
  const std::int64_t D = ((s % 4) + 4) % 4 == 1 ? s : 4 * s;
  return FrobeniusField{false, D};
}

}  // namespace isoradix
