// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <string>

#include "isoradix/curve.hpp"
#include "isoradix/errors.hpp"

namespace isoradix {

// Trace data at one prime for one residue degree.  The Frobenius roots are
// never materialized: everything about them flows through the integer
// recurrence t_j = a·t_{j-1} - p·t_{j-2}.
struct LocalLData {
  std::uint64_t p = 0;
  int k = 1;               // residue degree
  std::int64_t a = 0;      // trace at degree 1
  std::int64_t t_k = 0;    // degree-k trace
  std::uint64_t N_k = 0;   // #E(F_{p^k}) = p^k + 1 - t_k
};

// a_p = p + 1 - #E(F_p).  Satisfies |a| <= 2·sqrt(p).
std::int64_t trace(const ReducedCurve& E, std::uint64_t seed);

// Local L-polynomial 1 - a·T + p·T².  Rejects traces beyond the Hasse bound.
struct LPoly {
  std::int64_t c0 = 1;
  std::int64_t c1 = 0;  // -a
  std::int64_t c2 = 0;  // p
  std::uint64_t at_one() const { return static_cast<std::uint64_t>(c0 + c1 + c2); }
};
LPoly lpoly(std::int64_t a, std::uint64_t p);

// Group order over F_{p^k} via the trace recurrence.  Degree capped at 10
// and p^k < 2^62 so everything stays in word-size integers.
inline constexpr int kMaxExtensionDegree = 10;
LocalLData count_extension(std::int64_t a, std::uint64_t p, int k);

enum class ReductionClass {
  Ordinary,            // p does not divide t_k
  SupersingularTwice,  // L = (1 ± √q T)²,  t_k = ±2√(p^k)
  SupersingularRoot,   // L = 1 ± √q T + qT²,  t_k² = p^k
  SupersingularZero,   // L = 1 + qT²,  t_k = 0
};
ReductionClass classify(const LocalLData& d);
std::string reduction_class_name(ReductionClass c);  // "ordinary" | "supersingular"

// Fundamental discriminant of the imaginary quadratic field generated by a
// Frobenius root: the discriminant of Q(sqrt(a² - 4p)).  rational_split is
// reserved for extension data where a² = 4p can occur.
struct FrobeniusField {
  bool rational_split = false;
  std::int64_t D = 0;  // fundamental discriminant, < 0 when !rational_split
};
FrobeniusField frobenius_field_disc(std::int64_t a, std::uint64_t p);

}  // namespace isoradix
