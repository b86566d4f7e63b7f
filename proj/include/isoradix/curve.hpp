// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "isoradix/errors.hpp"
#include "isoradix/hash.hpp"
#include "isoradix/modarith.hpp"
#include "isoradix/rng.hpp"

namespace isoradix {

using bigint = boost::multiprecision::cpp_int;

// Integral short Weierstrass model y² = x³ + a·x + b over Q.  Coefficients
// are arbitrary-precision: input models (e.g. minimal models of small
// conductor) routinely exceed word size even though all per-prime arithmetic
// happens in word-size fields after reduction.
struct RationalCurve {
  std::string label;
  bigint a;
  bigint b;

  RationalCurve(std::string label_, bigint a_, bigint b_);

  // disc = -16(4a³ + 27b²); nonzero by construction.
  const bigint& disc() const { return disc_; }

  // Content hash of (a, b): stable identity for caching, independent of the
  // label.
  Digest128 key() const;

  // Good reduction at p means p ≥ 5 and p ∤ disc.
  bool good_at(std::uint64_t p) const;

 private:
  bigint disc_;
};

// True when the j-invariant is one of the thirteen rational CM values
// (class-number-one discriminants).  Exact integer test, no floats.
bool has_cm_j_invariant(const RationalCurve& E);

// y² = x³ + a·x + b over F_p with 4a³ + 27b² ≠ 0.
struct ReducedCurve {
  PrimeField F;
  std::uint64_t a;
  std::uint64_t b;

  ReducedCurve(PrimeField field, std::uint64_t a_, std::uint64_t b_);

  std::uint64_t rhs(std::uint64_t x) const {
    return F.add(F.mul(F.add(F.mul(x, x), a), x), b);  // x³ + ax + b
  }

  friend bool operator==(const ReducedCurve&, const ReducedCurve&) = default;
};

// Affine point or the point at infinity (the group identity).
struct Point {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  bool inf = true;

  static Point infinity() { return Point{}; }
  static Point affine(std::uint64_t x, std::uint64_t y) { return Point{x, y, false}; }

  friend bool operator==(const Point&, const Point&) = default;
};

bool on_curve(const Point& P, const ReducedCurve& E);

// Reduction mod p.  nullopt signals bad reduction (p | disc); p < 5 is a
// user error because the toolkit excludes 2 and 3 globally.
std::optional<ReducedCurve> reduce(const RationalCurve& E, std::uint64_t p);

// Group law.  Inputs must lie on E (asserted).
Point point_neg(const Point& P, const ReducedCurve& E);
Point point_add(const Point& P, const Point& Q, const ReducedCurve& E);
Point scalar_mul(std::uint64_t n, const Point& P, const ReducedCurve& E);

// Exact order by the quadratic-character sum N = p + 1 + Σ_x χ(x³+ax+b).
// O(p) time, O(p) bits of scratch.
std::uint64_t count_naive(const ReducedCurve& E);

// Exact order by baby-step/giant-step over the Hasse interval
// [p+1-⌊2√p⌋, p+1+⌊2√p⌋].  Candidate orders are the multiples of the lcm of
// sampled point orders inside the interval; if eight points leave more than
// one candidate the quadratic twist (orders sum to 2p+2) breaks the tie.
std::uint64_t count_bsgs(const ReducedCurve& E, std::uint64_t seed);

// Dispatch: naive below the threshold, BSGS above.  Both paths agree
// everywhere; the threshold is a speed knob only.
inline constexpr std::uint64_t kNaiveThreshold = std::uint64_t{1} << 14;
std::uint64_t group_order(const ReducedCurve& E, std::uint64_t seed,
                          std::uint64_t naive_threshold = kNaiveThreshold);

// Uniformly random point among the affine x-columns: sample x until
// x³+ax+b is a square, take the deterministic root, flip its sign on a coin.
Point random_point(const ReducedCurve& E, Rng& rng);

// Rank of the ℓ-torsion subgroup E(F_p)[ℓ], given ℓ | N = #E(F_p).
// rank 2 is certain and carries independent order-ℓ witnesses; rank 1 is
// Monte Carlo with one-sided error below 2^-20 (40-point schedule).  When
// ℓ ∤ p−1 the Weil pairing forces rank 1 and no sampling happens.
struct TorsionRank {
  int rank = 1;
  Point w1;  // order-ℓ witnesses, meaningful when rank == 2
  Point w2;
};
TorsionRank torsion_rank(const ReducedCurve& E, std::uint64_t ell, std::uint64_t N, Rng& rng);

// ⌊√n⌋ for 64-bit n.
std::uint64_t isqrt_u64(std::uint64_t n);

}  // namespace isoradix
