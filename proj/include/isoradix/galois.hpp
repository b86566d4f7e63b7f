// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "isoradix/cache.hpp"
#include "isoradix/curve.hpp"
#include "isoradix/rational.hpp"

namespace isoradix {

// [[a, b], [c, d]] over F_ell.
struct Mat2 {
  std::uint32_t a = 0, b = 0, c = 0, d = 0;
};

enum class GroupKind { GL2, SplitCartan, NonSplitCartan };

std::string model_name(GroupKind kind);  // "gl2" | "split" | "nonsplit"

struct GroupModel {
  GroupKind kind = GroupKind::GL2;
  std::uint64_t ell = 2;
};

// Validates the enumeration ranges: GL2 needs ell <= 31 (full enumeration),
// Cartans need an odd ell <= 499.  ell = 2 is admitted for GL2 only.
GroupModel make_model(GroupKind kind, std::uint64_t ell);

// Closed-form group order: (ℓ²-1)(ℓ²-ℓ), (ℓ-1)², ℓ²-1.
std::uint64_t model_order(const GroupModel& model);

// Every element exactly once.  Split Cartan: invertible diagonals.
// Non-split Cartan: [[a, b], [b·d, a]] ≠ 0 with d the smallest non-residue.
void for_each_element(const GroupModel& model, const std::function<void(const Mat2&)>& fn);

// Fraction of elements with det(g - 1) = 0: the Chebotarev density of
// {p : ℓ | #E(F_p)} under this image model.  Exact, by enumeration.
Rational eigen_one_fraction(const GroupModel& model);

// Over the equal-determinant fiber product of the two models, the fraction
// of pairs where exactly one side has det(g - 1) = 0: the predicted
// radical-mismatch density for a generic non-isogenous pair.
Rational coupled_mismatch_fraction(const GroupModel& m1, const GroupModel& m2);

struct ChebotarevComparison {
  Rational predicted;
  Rational observed;
  double sigma = 0;  // sqrt(predicted(1-predicted)/n)
  std::uint64_t primes_tested = 0;
};

// Observed density of {good p <= B : ℓ | #E(F_p)} against the model's
// prediction.  Refuses CM curves unless force_model is set: their images
// live in (normalizers of) Cartans and the naive density does not apply.
ChebotarevComparison predict_vs_observe(const RationalCurve& E, const GroupModel& model, std::uint64_t ell,
                                        std::uint64_t B, const std::vector<TraceRow>& rows, bool force_model);

}  // namespace isoradix
