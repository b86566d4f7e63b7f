// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "isoradix/errors.hpp"

namespace isoradix {

// Exact fraction with positive denominator, always reduced.  Group-theoretic
// densities are constants of the enumeration, never floats.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;

  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw InternalError("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    num = (g != 0) ? n / g : 0;
    den = (g != 0) ? d / g : 1;
  }

  // Builds from (possibly huge) enumeration counts, reducing before the
  // narrowing check.
  static Rational of_counts(__int128 n, __int128 d);

  friend bool operator==(const Rational&, const Rational&) = default;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline Rational operator+(const Rational& x, const Rational& y) {
  return Rational::of_counts(static_cast<__int128>(x.num) * y.den + static_cast<__int128>(y.num) * x.den,
                             static_cast<__int128>(x.den) * y.den);
}

inline Rational Rational::of_counts(__int128 n, __int128 d) {
  if (d == 0) throw InternalError("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n;
  __int128 b = d;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a != 0) {
    n /= a;
    d /= a;
  }
  constexpr __int128 kMax = std::int64_t{0x7fffffffffffffff};
  if (n > kMax || -n > kMax || d > kMax)
    throw InternalError("Rational: reduced fraction exceeds 64 bits");
  Rational r;
  r.num = static_cast<std::int64_t>(n);
  r.den = static_cast<std::int64_t>(d);
  return r;
}

}  // namespace isoradix
