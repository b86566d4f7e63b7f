// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#include "isoradix/distinguish.hpp"

#include <algorithm>

#include "isoradix/primes.hpp"
#include "isoradix/radical.hpp"

namespace isoradix {

namespace {

// Intersects two ascending trace tables on p.
std::vector<std::pair<TraceRow, TraceRow>> zip_common(const std::vector<TraceRow>& rows1,
                                                      const std::vector<TraceRow>& rows2, std::uint64_t B) {
  std::vector<std::pair<TraceRow, TraceRow>> out;
  std::size_t i = 0, j = 0;
  while (i < rows1.size() && j < rows2.size()) {
    if (rows1[i].p > B || rows2[j].p > B) break;
    if (rows1[i].p < rows2[j].p)
      ++i;
    else if (rows2[j].p < rows1[i].p)
      ++j;
    else {
      out.emplace_back(rows1[i], rows2[j]);
      ++i;
      ++j;
    }
  }
  return out;
}

std::uint64_t order_from(const TraceRow& row) {
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(row.p + 1) - row.a);
}

}  // namespace

std::vector<std::uint64_t> common_good_primes(const RationalCurve& E1, const RationalCurve& E2, std::uint64_t B) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : sieve_primes(B))
    if (E1.good_at(p) && E2.good_at(p)) out.push_back(p);
  return out;
}

MismatchReport mismatch_scan(const RationalCurve& E1, const RationalCurve& E2, std::uint64_t B,
                             std::vector<std::uint64_t> ells, const std::vector<TraceRow>& rows1,
                             const std::vector<TraceRow>& rows2) {
  if (ells.empty()) throw UserError("mismatch scan needs at least one test prime ell");
  std::sort(ells.begin(), ells.end());
  ells.erase(std::unique(ells.begin(), ells.end()), ells.end());
  for (std::uint64_t ell : ells)
    if (!is_prime_u64(ell))
      throw UserError("test modulus ell = " + std::to_string(ell) + " is not prime");

  MismatchReport report;
  report.key1 = E1.key();
  report.key2 = E2.key();
  report.B = B;
  report.ells = ells;

  std::vector<std::uint64_t> per_ell_primes(ells.size(), 0);
  const auto common = zip_common(rows1, rows2, B);
  report.primes_tested = common.size();
  for (const auto& [r1, r2] : common) {
    const std::uint64_t N1 = order_from(r1);
    const std::uint64_t N2 = order_from(r2);
    for (std::size_t j = 0; j < ells.size(); ++j) {
      const int v1 = valuation(N1, ells[j]);
      const int v2 = valuation(N2, ells[j]);
      if ((v1 == 0) != (v2 == 0)) {
        report.mismatches.push_back(Mismatch{r1.p, ells[j], v1, v2});
        ++per_ell_primes[j];
      }
    }
  }
  for (std::size_t j = 0; j < ells.size(); ++j) {
    PerEllDensity d;
    d.ell = ells[j];
    d.mismatch_primes = per_ell_primes[j];
    d.density = report.primes_tested == 0
                    ? Rational(0, 1)
                    : Rational::of_counts(static_cast<__int128>(per_ell_primes[j]),
                                          static_cast<__int128>(report.primes_tested));
    report.per_ell.push_back(d);
  }
  return report;
}

Verdict verdict(const MismatchReport& report) {
  if (report.primes_tested == 0)
    throw EmptySampleError("no common good primes <= " + std::to_string(report.B) +
                           "; raise the bound");
  Verdict v;
  v.primes_tested = report.primes_tested;
  if (!report.mismatches.empty()) {
    // mismatches are built in ascending (p, ℓ) order; front() is the
    // lexicographic minimum.
    v.status = VerdictStatus::Distinguished;
    v.witness_p = report.mismatches.front().p;
    v.witness_ell = report.mismatches.front().ell;
    v.note = "radical fingerprints differ; curves are not isogenous";
  } else {
    v.status = VerdictStatus::ConsistentWithIsogeny;
    v.note = "no mismatch <= " + std::to_string(report.B);
  }
  return v;
}

std::optional<ApDivergence> ap_equal_oracle(const RationalCurve& E1, const RationalCurve& E2, std::uint64_t B,
                                            const std::vector<TraceRow>& rows1,
                                            const std::vector<TraceRow>& rows2) {
  (void)E1;
  (void)E2;
  for (const auto& [r1, r2] : zip_common(rows1, rows2, B))
    if (r1.a != r2.a) return ApDivergence{r1.p, r1.a, r2.a};
  return std::nullopt;
}

Rational ValuationGrid::density(int m1, int m2) const {
  if (total == 0) throw EmptySampleError("valuation grid over an empty prime range");
  return Rational::of_counts(static_cast<__int128>(counts[static_cast<std::size_t>(m1)][static_cast<std::size_t>(m2)]),
                             static_cast<__int128>(total));
}

ValuationGrid joint_valuation_density(const RationalCurve& E1, const RationalCurve& E2, std::uint64_t ell,
                                      std::uint64_t B, const std::vector<TraceRow>& rows1,
                                      const std::vector<TraceRow>& rows2) {
  if (!is_prime_u64(ell)) throw UserError("test modulus ell = " + std::to_string(ell) + " is not prime");
  (void)E1;
  (void)E2;
  ValuationGrid grid;
  grid.ell = ell;
  grid.B = B;
  const auto clamp = [](int v) { return v > kValuationCap ? kValuationCap + 1 : v; };
  for (const auto& [r1, r2] : zip_common(rows1, rows2, B)) {
    const int v1 = valuation(order_from(r1), ell);
    const int v2 = valuation(order_from(r2), ell);
    ++grid.counts[static_cast<std::size_t>(clamp(v1))][static_cast<std::size_t>(clamp(v2))];
    ++grid.total;
  }
  return grid;
}

}  // namespace isoradix
