// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace isoradix {

// All primes <= bound, ascending (Eratosthenes).
std::vector<std::uint64_t> sieve_primes(std::uint64_t bound);

// The first `count` primes: 2, 3, 5, ...
std::vector<std::uint64_t> first_primes(std::size_t count);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Prime factorization of n >= 1 as ascending (prime, exponent) pairs.
// Trial division for small factors, Brent's cycle-finding rho for the rest.
std::vector<std::pair<std::uint64_t, int>> factorize_u64(std::uint64_t n);

}  // namespace isoradix
