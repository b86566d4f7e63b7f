// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <vector>

#include "isoradix/cache.hpp"
#include "isoradix/curve.hpp"

namespace isoradix {

// Exact ℓ-adic valuation of N >= 1.
int valuation(std::uint64_t N, std::uint64_t ell);

// min{1, v_ℓ(N)}: does ℓ divide the local point count.
int rho(std::uint64_t N, std::uint64_t ell);

// Valuation matrix of one curve over all good primes in [5, B]: full
// valuations are stored, the 0/1 radical is recoverable by clamping.
struct Fingerprint {
  Digest128 curve_key;
  int degree = 1;
  std::vector<std::uint64_t> primes;       // ascending good primes in [5, B]
  std::vector<std::uint64_t> ells;         // ascending test primes
  std::vector<std::vector<int>> vals;      // vals[i][j] = v_{ells[j]}(N_degree(primes[i]))
};

// Builds the matrix from swept trace rows (every good prime <= B with its
// a_p, ascending).  Degree-k orders come from the trace recurrence.
Fingerprint fingerprint(const RationalCurve& E, std::uint64_t B, std::vector<std::uint64_t> ells, int degree,
                        const std::vector<TraceRow>& rows);

// First 15 primes: the default test set.
std::vector<std::uint64_t> default_ells();

}  // namespace isoradix
