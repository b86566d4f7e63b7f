// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <cstdint>
#include <vector>

#include "isoradix/distinguish.hpp"
#include "isoradix/primes.hpp"
#include "isoradix/sweep.hpp"

using namespace isoradix;

namespace {

std::vector<TraceRow> rows_for(const RationalCurve& E, std::uint64_t B) {
  return sweep_traces(E, B, SweepOptions{}).rows;
}

const RationalCurve& cm_i() {
  static const RationalCurve E("cm_i", 1, 0);
  return E;
}
const RationalCurve& cm_j() {
  static const RationalCurve E("cm_j", 0, 1);
  return E;
}
const RationalCurve& cm_i_iso() {
  static const RationalCurve E("cm_i_iso", -4, 0);
  return E;
}

}  // namespace

TEST_SUITE("distinguish") {

TEST_CASE("common_good_primes") {
  CHECK(common_good_primes(cm_i(), cm_j(), 50).size() == 13);  // all primes in [5, 47]
  RationalCurve c11("c11a", -13392, -1080432);
  CHECK(common_good_primes(c11, cm_i(), 20) ==
        std::vector<std::uint64_t>{5, 7, 13, 17, 19});  // 11 divides one conductor
  CHECK(common_good_primes(cm_i(), cm_j(), 4).empty());
}

TEST_CASE("mismatch_scan reproduces the frozen comparison") {
  const auto report =
      mismatch_scan(cm_i(), cm_j(), 50, {2, 3, 5}, rows_for(cm_i(), 50), rows_for(cm_j(), 50));
  CHECK(report.key1 == cm_i().key());
  CHECK(report.key2 == cm_j().key());
  CHECK(report.B == 50);
  CHECK(report.primes_tested == 13);

  const std::vector<Mismatch> want = {
      {5, 3, 0, 1},  {7, 3, 0, 1},  {13, 3, 0, 1}, {13, 5, 1, 0}, {17, 3, 0, 2}, {19, 3, 0, 1},
      {19, 5, 1, 0}, {29, 3, 0, 1}, {31, 3, 0, 2}, {41, 3, 0, 1}, {43, 3, 0, 2}};
  CHECK(report.mismatches == want);

  REQUIRE(report.per_ell.size() == 3);
  CHECK(report.per_ell[0].ell == 2);
  CHECK(report.per_ell[0].mismatch_primes == 0);
  CHECK(report.per_ell[0].density == Rational(0, 1));
  CHECK(report.per_ell[1].ell == 3);
  CHECK(report.per_ell[1].mismatch_primes == 9);
  CHECK(report.per_ell[1].density == Rational(9, 13));
  CHECK(report.per_ell[2].ell == 5);
  CHECK(report.per_ell[2].mismatch_primes == 2);
  CHECK(report.per_ell[2].density == Rational(2, 13));
}

TEST_CASE("verdict distinguishes with the lexicographically first witness") {
  const auto report =
      mismatch_scan(cm_i(), cm_j(), 50, {2, 3, 5}, rows_for(cm_i(), 50), rows_for(cm_j(), 50));
  const Verdict v = verdict(report);
  CHECK(v.status == VerdictStatus::Distinguished);
  CHECK(v.witness_p == 5);
  CHECK(v.witness_ell == 3);
  CHECK(v.primes_tested == 13);
}

TEST_CASE("isogenous pair stays consistent and says what was checked") {
  const auto report = mismatch_scan(cm_i(), cm_i_iso(), 200, {2, 3, 5, 7}, rows_for(cm_i(), 200),
                                    rows_for(cm_i_iso(), 200));
  CHECK(report.primes_tested == 44);
  CHECK(report.mismatches.empty());
  const Verdict v = verdict(report);
  CHECK(v.status == VerdictStatus::ConsistentWithIsogeny);
  CHECK(v.note.find("200") != std::string::npos);  // the caveat names the bound
  CHECK(v.primes_tested == 44);
}

TEST_CASE("empty prime range raises EmptySample") {
  const auto report = mismatch_scan(cm_i(), cm_j(), 4, {2}, {}, {});
  CHECK(report.primes_tested == 0);
  CHECK_THROWS_AS(verdict(report), EmptySampleError);
  CHECK_THROWS_WITH_AS(verdict(report), doctest::Contains("EmptySample"), EmptySampleError);
}

TEST_CASE("ap_equal_oracle finds the first trace divergence") {
  const auto d = ap_equal_oracle(cm_i(), cm_j(), 50, rows_for(cm_i(), 50), rows_for(cm_j(), 50));
  REQUIRE(d.has_value());
  CHECK(d->p == 5);
  CHECK(d->a1 == 2);
  CHECK(d->a2 == 0);

  RationalCurve c11("c11a", -13392, -1080432);
  RationalCurve c11t("c11a_t5", -13392 * 25, bigint(-1080432) * 125);
  const auto dt = ap_equal_oracle(c11, c11t, 50, rows_for(c11, 50), rows_for(c11t, 50));
  REQUIRE(dt.has_value());
  CHECK(dt->p == 7);
  CHECK(dt->a1 == -2);
  CHECK(dt->a2 == 2);

  CHECK(!ap_equal_oracle(cm_i(), cm_i_iso(), 1000, rows_for(cm_i(), 1000), rows_for(cm_i_iso(), 1000))
             .has_value());
}

TEST_CASE("joint valuation grid matches the frozen table") {
  const auto g = joint_valuation_density(cm_i(), cm_j(), 2, 200, rows_for(cm_i(), 200),
                                         rows_for(cm_j(), 200));
  CHECK(g.ell == 2);
  CHECK(g.B == 200);
  CHECK(g.total == 44);
  // Nonzero cells, frozen from the brute-force tables.
  CHECK(g.counts[2][1] == 7);
  CHECK(g.counts[2][2] == 14);
  CHECK(g.counts[2][4] == 3);
  CHECK(g.counts[3][2] == 4);
  CHECK(g.counts[3][3] == 3);
  CHECK(g.counts[4][1] == 2);
  CHECK(g.counts[4][2] == 3);
  CHECK(g.counts[4][4] == 1);
  CHECK(g.counts[4][6] == 1);
  CHECK(g.counts[5][1] == 2);
  CHECK(g.counts[5][2] == 1);
  CHECK(g.counts[6][6] == 1);
  CHECK(g.counts[7][1] == 1);
  CHECK(g.counts[7][2] == 1);
  CHECK(g.counts[0][0] == 0);  // both orders are always even here
  CHECK(g.density(2, 2) == Rational(14, 44));

  // Densities sum to exactly 1.
  Rational sum(0, 1);
  std::uint64_t count_sum = 0;
  for (int i = 0; i < kValuationCap + 2; ++i)
    for (int j = 0; j < kValuationCap + 2; ++j) {
      sum = sum + g.density(i, j);
      count_sum += g.counts[i][j];
    }
  CHECK(sum == Rational(1, 1));
  CHECK(count_sum == g.total);
}

TEST_CASE("isogenous pair gives a diagonal grid") {
  const auto g = joint_valuation_density(cm_i(), cm_i_iso(), 2, 200, rows_for(cm_i(), 200),
                                         rows_for(cm_i_iso(), 200));
  CHECK(g.total == 44);
  CHECK(g.counts[2][2] == 24);
  CHECK(g.counts[3][3] == 7);
  CHECK(g.counts[4][4] == 7);
  CHECK(g.counts[5][5] == 3);
  CHECK(g.counts[6][6] == 1);
  CHECK(g.counts[7][7] == 2);
  for (int i = 0; i < kValuationCap + 2; ++i)
    for (int j = 0; j < kValuationCap + 2; ++j)
      if (i != j) CHECK(g.counts[i][j] == 0);
}

TEST_CASE("valuations past the cap land in the overflow bucket") {
  // y² = x³ + x at p = 8191 = 2^13 - 1 is supersingular with N = 2^13.
  const auto rows = rows_for(cm_i(), 10000);
  const auto g = joint_valuation_density(cm_i(), cm_i(), 2, 10000, rows, rows);
  CHECK(g.total == 1227);  // primes in [5, 10^4]
  CHECK(g.counts[kValuationCap + 1][kValuationCap + 1] >= 1);
  for (int i = 0; i < kValuationCap + 2; ++i)
    for (int j = 0; j < kValuationCap + 2; ++j)
      if (i != j) CHECK(g.counts[i][j] == 0);
}

TEST_CASE("grid over an empty range refuses to quote densities") {
  const auto g = joint_valuation_density(cm_i(), cm_j(), 2, 4, {}, {});
  CHECK(g.total == 0);
  CHECK_THROWS_AS(g.density(0, 0), EmptySampleError);
}

}  // TEST_SUITE
