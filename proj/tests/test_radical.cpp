// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <cstdint>
#include <vector>

#include "isoradix/lfunc.hpp"
#include "isoradix/radical.hpp"

using namespace isoradix;

namespace {

// y² = x³ + x: frozen brute-force trace rows for p <= 50.
std::vector<TraceRow> cm_i_rows() {
  return {{5, 2},   {7, 0},  {11, 0}, {13, -6}, {17, 2}, {19, 0},  {23, 0},
          {29, 10}, {31, 0}, {37, 2}, {41, 10}, {43, 0}, {47, 0}};
}

}  // namespace

TEST_SUITE("radical") {

TEST_CASE("valuation and rho") {
  CHECK(valuation(1, 2) == 0);
  CHECK(valuation(8, 2) == 3);
  CHECK(valuation(12, 2) == 2);
  CHECK(valuation(12, 3) == 1);
  CHECK(valuation(12, 5) == 0);
  CHECK(valuation(std::uint64_t{1} << 62, 2) == 62);
  CHECK_THROWS_AS(valuation(0, 2), InternalError);
  CHECK_THROWS_AS(valuation(8, 1), InternalError);

  CHECK(rho(12, 2) == 1);
  CHECK(rho(12, 5) == 0);
  CHECK(rho(25, 5) == 1);  // clamped: v = 2 but ρ = 1
  CHECK(rho(1, 2) == 0);
}

TEST_CASE("default test primes are the first fifteen") {
  const auto ells = default_ells();
  REQUIRE(ells.size() == 15);
  CHECK(ells.front() == 2);
  CHECK(ells[1] == 3);
  CHECK(ells.back() == 47);
}

TEST_CASE("fingerprint matches the frozen valuation matrix") {
  RationalCurve E("cm_i", 1, 0);
  const auto fp = fingerprint(E, 50, {2, 3, 5}, 1, cm_i_rows());
  CHECK(fp.curve_key == E.key());
  CHECK(fp.degree == 1);
  CHECK(fp.ells == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(fp.primes ==
        std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47});
  const std::vector<std::vector<int>> want = {
      {2, 0, 0}, {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {4, 0, 0}, {2, 0, 1}, {3, 1, 0},
      {2, 0, 1}, {5, 0, 0}, {2, 2, 0}, {5, 0, 0}, {2, 0, 0}, {4, 1, 0}};
  CHECK(fp.vals == want);
}

TEST_CASE("fingerprint sorts and dedupes the test primes") {
  RationalCurve E("cm_i", 1, 0);
  const auto fp = fingerprint(E, 50, {5, 2, 3, 3, 2}, 1, cm_i_rows());
  CHECK(fp.ells == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(fp.vals[0] == std::vector<int>{2, 0, 0});  // p = 5, N = 4
}

TEST_CASE("fingerprint at degree 2 tracks the extension orders") {
  RationalCurve E("cm_i", 1, 0);
  const auto fp = fingerprint(E, 50, {2, 3}, 2, cm_i_rows());
  REQUIRE(fp.primes.size() == cm_i_rows().size());
  for (std::size_t i = 0; i < fp.primes.size(); ++i) {
    const std::uint64_t N2 = count_extension(cm_i_rows()[i].a, fp.primes[i], 2).N_k;
    CHECK(fp.vals[i][0] == valuation(N2, 2));
    CHECK(fp.vals[i][1] == valuation(N2, 3));
  }
  // Spot value: p = 5, N_2 = 32 = 2^5.
  CHECK(fp.vals[0] == std::vector<int>{5, 0});
}

TEST_CASE("fingerprint honours the bound") {
  RationalCurve E("cm_i", 1, 0);
  const auto fp = fingerprint(E, 20, {2}, 1, cm_i_rows());
  CHECK(fp.primes == std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19});
}

TEST_CASE("fingerprint validates its inputs") {
  RationalCurve E("cm_i", 1, 0);
  CHECK_THROWS_AS(fingerprint(E, 4, {2}, 1, {}), UserError);
  CHECK_THROWS_AS(fingerprint(E, 50, {}, 1, cm_i_rows()), UserError);
  CHECK_THROWS_AS(fingerprint(E, 50, {4}, 1, cm_i_rows()), UserError);
  CHECK_THROWS_AS(fingerprint(E, 50, {1}, 1, cm_i_rows()), UserError);
  CHECK_THROWS_AS(fingerprint(E, 50, {2, 9}, 1, cm_i_rows()), UserError);
}

}  // TEST_SUITE
