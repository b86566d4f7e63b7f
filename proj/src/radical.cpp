// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#include "isoradix/radical.hpp"

#include <algorithm>

#include "isoradix/lfunc.hpp"
#include "isoradix/primes.hpp"

namespace isoradix {

int valuation(std::uint64_t N, std::uint64_t ell) {
  if (N == 0) throw InternalError("valuation: N must be positive");
  if (ell < 2) throw InternalError("valuation: ell must be at least 2");
  int v = 0;
  while (N % ell == 0) {
    N /= ell;
    ++v;
  }
  return v;
}

int rho(std::uint64_t N, std::uint64_t ell) { return N % ell == 0 ? 1 : 0; }

std::vector<std::uint64_t> default_ells() { return first_primes(15); }

Fingerprint fingerprint(const RationalCurve& E, std::uint64_t B, std::vector<std::uint64_t> ells, int degree,
                        const std::vector<TraceRow>& rows) {
  if (B < 5) throw UserError("fingerprint bound must be at least 5 (got " + std::to_string(B) + ")");
  if (ells.empty()) throw UserError("fingerprint needs at least one test prime ell");
  std::sort(ells.begin(), ells.end());
  ells.erase(std::unique(ells.begin(), ells.end()), ells.end());
  for (std::uint64_t ell : ells)
    if (!is_prime_u64(ell))
      throw UserError("test modulus ell = " + std::to_string(ell) + " is not prime");

  Fingerprint fp;
  fp.curve_key = E.key();
  fp.degree = degree;
  fp.ells = std::move(ells);
  fp.primes.reserve(rows.size());
  fp.vals.reserve(rows.size());
  for (const TraceRow& row : rows) {
    if (row.p > B) break;
    const std::uint64_t N = count_extension(row.a, row.p, degree).N_k;
    std::vector<int> vrow(fp.ells.size());
    for (std::size_t j = 0; j < fp.ells.size(); ++j) vrow[j] = valuation(N, fp.ells[j]);
    fp.primes.push_back(row.p);
    fp.vals.push_back(std::move(vrow));
  }
  return fp;
}

}  // namespace isoradix
