// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoradix/cache.hpp"
#include "isoradix/curve.hpp"
#include "isoradix/rational.hpp"

namespace isoradix {

// One radical disagreement: ℓ divides exactly one of the two local orders.
struct Mismatch {
  std::uint64_t p = 0;
  std::uint64_t ell = 0;
  int v1 = 0;  // v_ℓ(#E1(F_p))
  int v2 = 0;  // v_ℓ(#E2(F_p))

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct PerEllDensity {
  std::uint64_t ell = 0;
  std::uint64_t mismatch_primes = 0;
  Rational density;  // mismatch_primes / primes_tested
};

struct MismatchReport {
  Digest128 key1, key2;
  std::uint64_t B = 0;
  std::vector<std::uint64_t> ells;
  std::uint64_t primes_tested = 0;
  std::vector<Mismatch> mismatches;  // ascending lexicographic (p, ℓ)
  std::vector<PerEllDensity> per_ell;
};

enum class VerdictStatus { Distinguished, ConsistentWithIsogeny };

// Distinguished carries the smallest witness; consistency is evidence, not
// proof, and says so.
struct Verdict {
  VerdictStatus status = VerdictStatus::ConsistentWithIsogeny;
  std::uint64_t witness_p = 0;
  std::uint64_t witness_ell = 0;
  std::uint64_t primes_tested = 0;
  std::string note;
};

// Primes in [5, B] dividing neither discriminant.
std::vector<std::uint64_t> common_good_primes(const RationalCurve& E1, const RationalCurve& E2, std::uint64_t B);

// Exhaustive radical comparison over the common good primes.  rows1/rows2
// are the curves' swept traces covering [5, B].
MismatchReport mismatch_scan(const RationalCurve& E1, const RationalCurve& E2, std::uint64_t B,
                             std::vector<std::uint64_t> ells, const std::vector<TraceRow>& rows1,
                             const std::vector<TraceRow>& rows2);

// Throws EmptySampleError when the scan saw no primes.
Verdict verdict(const MismatchReport& report);

struct ApDivergence {
  std::uint64_t p = 0;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
};

// Trace equality at every common good prime <= B: the ground truth the
// radical comparison is measured against.  nullopt means equal throughout.
std::optional<ApDivergence> ap_equal_oracle(const RationalCurve& E1, const RationalCurve& E2, std::uint64_t B,
                                            const std::vector<TraceRow>& rows1, const std::vector<TraceRow>& rows2);

// Joint distribution of (v_ℓ(#E1), v_ℓ(#E2)) over the sweep.  Valuations
// past the cap share one overflow bucket so the grid stays small.
inline constexpr int kValuationCap = 8;

struct ValuationGrid {
  std::uint64_t ell = 0;
  std::uint64_t B = 0;
  std::uint64_t total = 0;  // common good primes
  // indices 0..kValuationCap hold exact valuations, the last row/column is
  // the overflow bucket
  std::array<std::array<std::uint64_t, kValuationCap + 2>, kValuationCap + 2> counts{};

  Rational density(int m1, int m2) const;  // counts[m1][m2] / total
};

ValuationGrid joint_valuation_density(const RationalCurve& E1, const RationalCurve& E2, std::uint64_t ell,
                                      std::uint64_t B, const std::vector<TraceRow>& rows1,
                                      const std::vector<TraceRow>& rows2);

}  // namespace isoradix
