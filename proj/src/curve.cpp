// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#include "isoradix/curve.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <vector>

namespace isoradix {

RationalCurve::RationalCurve(std::string label_, bigint a_, bigint b_)
    : label(std::move(label_)), a(std::move(a_)), b(std::move(b_)) {
  disc_ = -16 * (4 * a * a * a + 27 * b * b);
  if (disc_ == 0) throw UserError("curve '" + label + "': singular model (disc = 0)");
}

Digest128 RationalCurve::key() const { return murmur3_128(a.str() + "|" + b.str()); }

bool RationalCurve::good_at(std::uint64_t p) const { return p >= 5 && disc_ % p != 0; }

bool has_cm_j_invariant(const RationalCurve& E) {
  // The thirteen j-invariants with complex multiplication over Q
  // (class-number-one imaginary quadratic orders).
  static const long long kCmJ[] = {0,
                                   1728,
                                   -3375,
                                   8000,
                                   54000,
                                   287496,
                                   -32768,
                                   -884736,
                                   -12288000,
                                   16581375,
                                   -884736000,
                                   -147197952000LL,
                                   -262537412640768000LL};
  const bigint c = 4 * E.a * E.a * E.a + 27 * E.b * E.b;  // nonzero by construction
  const bigint lhs = 6912 * E.a * E.a * E.a;              // j = lhs / c
  for (long long j : kCmJ)
    if (lhs == j * c) return true;
  return false;
}

ReducedCurve::ReducedCurve(PrimeField field, std::uint64_t a_, std::uint64_t b_) : F(field), a(a_), b(b_) {
  const std::uint64_t d =
      F.add(F.mul(F.from_signed(4), F.mul(a, F.mul(a, a))), F.mul(F.from_signed(27), F.mul(b, b)));
  if (d == 0)
    throw InternalError("singular reduced curve over F_" + std::to_string(F.p()));
}

bool on_curve(const Point& P, const ReducedCurve& E) {
  if (P.inf) return true;
  return E.F.mul(P.y, P.y) == E.rhs(P.x);
}

std::optional<ReducedCurve> reduce(const RationalCurve& E, std::uint64_t p) {
  if (p < 5)
    throw UserError("p = " + std::to_string(p) + ": primes 2 and 3 are excluded, use p >= 5");
  PrimeField F(p);  // validates primality
  if (!E.good_at(p)) return std::nullopt;
  const auto to_elem = [&](const bigint& v) {
    bigint m = v % p;
    if (m < 0) m += p;
    return m.convert_to<std::uint64_t>();
  };
  return ReducedCurve(F, to_elem(E.a), to_elem(E.b));
}

Point point_neg(const Point& P, const ReducedCurve& E) {
  if (P.inf) return P;
  return Point::affine(P.x, E.F.neg(P.y));
}

Point point_add(const Point& P, const Point& Q, const ReducedCurve& E) {
  assert(on_curve(P, E) && on_curve(Q, E));
  if (P.inf) return Q;
  if (Q.inf) return P;
  const PrimeField& F = E.F;
  std::uint64_t lambda;
  if (P.x == Q.x) {
    if (F.add(P.y, Q.y) == 0) return Point::infinity();  // Q = -P, includes 2-torsion doubling
    // P == Q with y != 0: tangent slope (3x² + a) / (2y)
    const std::uint64_t xx = F.mul(P.x, P.x);
    const std::uint64_t num = F.add(F.add(F.add(xx, xx), xx), E.a);
    lambda = F.mul(num, F.inv(F.add(P.y, P.y)));
  } else {
    lambda = F.mul(F.sub(Q.y, P.y), F.inv(F.sub(Q.x, P.x)));
  }
  const std::uint64_t x3 = F.sub(F.sub(F.mul(lambda, lambda), P.x), Q.x);
  const std::uint64_t y3 = F.sub(F.mul(lambda, F.sub(P.x, x3)), P.y);
  return Point::affine(x3, y3);
}

Point scalar_mul(std::uint64_t n, const Point& P, const ReducedCurve& E) {
  Point acc = Point::infinity();
  Point base = P;
  while (n != 0) {
    if (n & 1) acc = point_add(acc, base, E);
    n >>= 1;
    if (n != 0) base = point_add(base, base, E);
  }
  return acc;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t count_naive(const ReducedCurve& E) {
  const PrimeField& F = E.F;
  const std::uint64_t p = F.p();
  // Square table: one pass of x² marks every quadratic residue.
  std::vector<bool> sq(p, false);
  for (std::uint64_t u = 0; u <= p / 2; ++u) sq[F.mul(u, u)] = true;
  // x³ + ax + b by finite differences: three modular adds per x.
  std::uint64_t f = E.b;
  std::uint64_t d1 = F.add(1, E.a);
  const std::uint64_t six = F.from_signed(6);
  std::uint64_t d2 = six;
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    if (f != 0) sum += sq[f] ? 1 : -1;
    f = F.add(f, d1);
    d1 = F.add(d1, d2);
    d2 = F.add(d2, six);
  }
  const std::uint64_t N = static_cast<std::uint64_t>(static_cast<std::int64_t>(p + 1) + sum);
  assert(static_cast<std::uint64_t>(sum < 0 ? -sum : sum) <= isqrt_u64(4 * p));
  return N;
}

Point random_point(const ReducedCurve& E, Rng& rng) {
  const PrimeField& F = E.F;
  for (;;) {
    const std::uint64_t x = rng.below(F.p());
    const auto y = F.sqrt(E.rhs(x));
    if (!y) continue;
    const std::uint64_t yy = rng.coin() ? F.neg(*y) : *y;
    return Point::affine(x, yy);
  }
}

namespace {

// All multiples of ord(P) in [L, U], via baby-step/giant-step on
// m·P = O  ⟺  u·P = -(L·P)  with  m = L + u,  u = i·s + j.
// Never empty: the group order is such a multiple.
std::vector<std::uint64_t> order_multiples_in_interval(const ReducedCurve& E, const Point& P, std::uint64_t L,
                                                       std::uint64_t U) {
  assert(!P.inf);
  const std::uint64_t W = U - L + 1;
  const std::uint64_t s = isqrt_u64(W) + 1;

  const auto multiples_of = [&](std::uint64_t ord) {
    std::vector<std::uint64_t> ms;
    for (std::uint64_t m = ((L + ord - 1) / ord) * ord; m <= U; m += ord) ms.push_back(m);
    return ms;
  };

  // Baby steps j·P for 1 <= j < s.  Hitting O reveals ord(P) directly.
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>> baby;
  baby.reserve(s);
  Point B = P;
  for (std::uint64_t j = 1; j < s; ++j) {
    if (B.inf) return multiples_of(j);
    baby[B.x].emplace_back(j, B.y);
    B = point_add(B, P, E);
  }
  if (B.inf) return multiples_of(s);
  const Point neg_sP = point_neg(B, E);  // B = s·P

  Point R = point_neg(scalar_mul(L, P, E), E);
  const std::uint64_t giants = (W + s - 1) / s;
  std::vector<std::uint64_t> ms;
  for (std::uint64_t i = 0; i < giants; ++i) {
    if (R.inf) {
      const std::uint64_t u = i * s;
      if (u < W) ms.push_back(L + u);
    } else if (auto it = baby.find(R.x); it != baby.end()) {
      for (const auto& [j, y] : it->second) {
        if (R.y == y) {
          const std::uint64_t u = i * s + j;
          if (u < W) ms.push_back(L + u);
        }
      }
    }
    R = point_add(R, neg_sP, E);
  }
  std::sort(ms.begin(), ms.end());
  if (ms.empty())
    throw InternalError("count_bsgs: no candidate order in the Hasse interval at p=" + std::to_string(E.F.p()));
  return ms;
}

struct SideState {
  std::uint64_t known = 1;  // lcm of sampled point orders; divides the true N
  std::vector<Point> samples;
  std::optional<std::uint64_t> unique;  // set once a single candidate survives
};

// One more sampled point folded into the state.
void narrow_once(SideState& st, const ReducedCurve& E, Rng& rng, std::uint64_t L, std::uint64_t U) {
  if (st.unique) return;
  const Point P = random_point(E, rng);
  st.samples.push_back(P);
  const auto ms = order_multiples_in_interval(E, P, L, U);
  if (ms.size() == 1) {
    st.unique = ms[0];
    return;
  }
  const std::uint64_t ord = ms[1] - ms[0];
  st.known = std::lcm(st.known, ord);
  const std::uint64_t first = ((L + st.known - 1) / st.known) * st.known;
  if (first > U)
    throw InternalError("count_bsgs: point-order lcm excludes the whole Hasse interval");
  if (first + st.known > U) st.unique = first;
}

std::vector<std::uint64_t> side_candidates(const SideState& st, std::uint64_t L, std::uint64_t U) {
  if (st.unique) return {*st.unique};
  std::vector<std::uint64_t> cands;
  for (std::uint64_t m = ((L + st.known - 1) / st.known) * st.known; m <= U; m += st.known) cands.push_back(m);
  return cands;
}

}  // namespace

std::uint64_t count_bsgs(const ReducedCurve& E, std::uint64_t seed) {
  const PrimeField& F = E.F;
  const std::uint64_t p = F.p();
  const std::uint64_t h = isqrt_u64(4 * p);
  const std::uint64_t L = p + 1 - h;
  const std::uint64_t U = p + 1 + h;
  const std::uint64_t S = 2 * p + 2;  // order + twist order

  Rng rng(mix_seed({seed, p, E.a, E.b}));

  const auto verified = [&](std::uint64_t N, const SideState& side, const SideState& twist_side) {
    for (const Point& P : side.samples)
      if (!scalar_mul(N, P, E).inf)
        throw InternalError("count_bsgs: candidate order fails Lagrange check at p=" + std::to_string(p));
    (void)twist_side;
    return N;
  };

  SideState A;
  for (int t = 0; t < 8 && !A.unique; ++t) narrow_once(A, E, rng, L, U);
  if (A.unique) return verified(*A.unique, A, A);

  // Quadratic twist by the smallest non-residue; orders sum to 2p+2.
  std::uint64_t d = 2;
  while (F.legendre(d) != -1) ++d;
  const ReducedCurve Et(F, F.mul(E.a, F.mul(d, d)), F.mul(E.b, F.mul(d, F.mul(d, d))));
  SideState B;
  for (int t = 0; t < 8 && !B.unique; ++t) narrow_once(B, Et, rng, L, U);

  const auto surviving = [&]() {
    const auto candsA = side_candidates(A, L, U);
    const auto candsB = side_candidates(B, L, U);
    std::vector<std::uint64_t> valid;
    for (std::uint64_t m : candsA)
      if (std::binary_search(candsB.begin(), candsB.end(), S - m)) valid.push_back(m);
    return valid;
  };

  auto valid = surviving();
  // Extra sampling rounds for the rare case where both sides stay ambiguous.
  for (int round = 0; valid.size() > 1 && round < 32; ++round) {
    narrow_once(A, E, rng, L, U);
    narrow_once(B, Et, rng, L, U);
    valid = surviving();
  }
  if (valid.size() == 1) {
    const std::uint64_t N = valid[0];
    for (const Point& P : B.samples)
      if (!scalar_mul(S - N, P, Et).inf)
        throw InternalError("count_bsgs: twist order fails Lagrange check at p=" + std::to_string(p));
    return verified(N, A, B);
  }

  // Last resort: by now `known` is the group exponent with overwhelming
  // probability, so N = n₁·known with n₁ | gcd(known, p-1) (and likewise on
  // the twist).  Keeps tiny full-torsion groups (e.g. Z/2 × Z/2 at p = 5)
  // from aborting.
  const std::uint64_t gA = std::gcd(A.known, p - 1);
  const std::uint64_t gB = std::gcd(B.known, p - 1);
  std::vector<std::uint64_t> strict;
  for (std::uint64_t m : valid) {
    const std::uint64_t n1 = m / A.known;
    const std::uint64_t n1t = (S - m) / B.known;
    if (gA % n1 == 0 && gB % n1t == 0) strict.push_back(m);
  }
  if (strict.size() == 1) {
    const std::uint64_t N = strict[0];
    for (const Point& P : B.samples)
      if (!scalar_mul(S - N, P, Et).inf)
        throw InternalError("count_bsgs: twist order fails Lagrange check at p=" + std::to_string(p));
    return verified(N, A, B);
  }
  throw InternalError("count_bsgs: order ambiguous after twist disambiguation at p=" + std::to_string(p));
}

std::uint64_t group_order(const ReducedCurve& E, std::uint64_t seed, std::uint64_t naive_threshold) {
  return E.F.p() < naive_threshold ? count_naive(E) : count_bsgs(E, seed);
}

TorsionRank torsion_rank(const ReducedCurve& E, std::uint64_t ell, std::uint64_t N, Rng& rng) {
  if (ell < 2 || N % ell != 0)
    throw InternalError("torsion_rank: ell = " + std::to_string(ell) + " does not divide N = " + std::to_string(N));
  const std::uint64_t p = E.F.p();
  // Full ℓ-torsion needs the ℓ-th roots of unity in F_p (Weil pairing).
  if ((p - 1) % ell != 0) return TorsionRank{1, {}, {}};

  std::uint64_t M = N;
  while (M % ell == 0) M /= ell;  // N / ℓ^v

  Point first = Point::infinity();
  for (int trial = 0; trial < 40; ++trial) {
    Point Q = scalar_mul(M, random_point(E, rng), E);  // lands in the ℓ-Sylow
    if (Q.inf) continue;
    for (;;) {
      const Point R = scalar_mul(ell, Q, E);
      if (R.inf) break;
      Q = R;
    }
    // Q has exact order ℓ.
    if (first.inf) {
      first = Q;
      continue;
    }
    bool in_span = false;
    Point S = Point::infinity();
    for (std::uint64_t i = 0; i < ell; ++i) {
      if (S == Q) {
        in_span = true;
        break;
      }
      S = point_add(S, first, E);
    }
    if (!in_span) return TorsionRank{2, first, Q};
  }
  return TorsionRank{1, {}, {}};
}

}  // namespace isoradix
