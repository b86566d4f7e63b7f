// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#include "isoradix/galois.hpp"

#include <cmath>
#include <vector>

#include "isoradix/primes.hpp"

namespace isoradix {

std::string model_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::GL2: return "gl2";
    case GroupKind::SplitCartan: return "split";
    case GroupKind::NonSplitCartan: return "nonsplit";
  }
  throw InternalError("model_name: bad kind");
}

GroupModel make_model(GroupKind kind, std::uint64_t ell) {
  if (!is_prime_u64(ell)) throw UserError("ell = " + std::to_string(ell) + " is not prime");
  if (kind == GroupKind::GL2) {
    if (ell > 31)
      throw UserError("gl2 enumeration supports ell <= 31 (got " + std::to_string(ell) + ")");
  } else {
    if (ell == 2) throw UserError("Cartan models need an odd ell");
    if (ell > 499)
      throw UserError("Cartan enumeration supports ell <= 499 (got " + std::to_string(ell) + ")");
  }
  return GroupModel{kind, ell};
}

std::uint64_t model_order(const GroupModel& model) {
  const std::uint64_t l = model.ell;
  switch (model.kind) {
    case GroupKind::GL2: return (l * l - 1) * (l * l - l);
    case GroupKind::SplitCartan: return (l - 1) * (l - 1);
    case GroupKind::NonSplitCartan: return l * l - 1;
  }
  throw InternalError("model_order: bad kind");
}

namespace {

std::uint32_t smallest_nonresidue(std::uint64_t ell) {
  // Exists for every odd prime; the scan is tiny.
  for (std::uint64_t d = 2; d < ell; ++d) {
    std::uint64_t e = (ell - 1) / 2, b = d % ell, acc = 1;
    while (e != 0) {
      if (e & 1) acc = acc * b % ell;
      b = b * b % ell;
      e >>= 1;
    }
    if (acc == ell - 1) return static_cast<std::uint32_t>(d);
  }
  throw InternalError("no quadratic non-residue mod " + std::to_string(ell));
}

std::uint64_t det_mod(const Mat2& g, std::uint64_t l) {
  const std::uint64_t ad = static_cast<std::uint64_t>(g.a) * g.d % l;
  const std::uint64_t bc = static_cast<std::uint64_t>(g.b) * g.c % l;
  return (ad + l - bc) % l;
}

bool eigen_one(const Mat2& g, std::uint64_t l) {
  // det(g - 1) = (a-1)(d-1) - bc
  const std::uint64_t am = (g.a + l - 1) % l;
  const std::uint64_t dm = (g.d + l - 1) % l;
  const std::uint64_t lhs = am * dm % l;
  const std::uint64_t rhs = static_cast<std::uint64_t>(g.b) * g.c % l;
  return lhs == rhs;
}

}  // namespace

void for_each_element(const GroupModel& model, const std::function<void(const Mat2&)>& fn) {
  const std::uint32_t l = static_cast<std::uint32_t>(model.ell);
  switch (model.kind) {
    case GroupKind::GL2:
      for (std::uint32_t a = 0; a < l; ++a)
        for (std::uint32_t b = 0; b < l; ++b)
          for (std::uint32_t c = 0; c < l; ++c)
            for (std::uint32_t d = 0; d < l; ++d) {
              const Mat2 g{a, b, c, d};
              if (det_mod(g, l) != 0) fn(g);
            }
      return;
    case GroupKind::SplitCartan:
      for (std::uint32_t a = 1; a < l; ++a)
        for (std::uint32_t d = 1; d < l; ++d) fn(Mat2{a, 0, 0, d});
      return;
    case GroupKind::NonSplitCartan: {
      const std::uint32_t d = smallest_nonresidue(model.ell);
      for (std::uint32_t a = 0; a < l; ++a)
        for (std::uint32_t b = 0; b < l; ++b) {
          if (a == 0 && b == 0) continue;
          fn(Mat2{a, b, static_cast<std::uint32_t>(static_cast<std::uint64_t>(b) * d % l), a});
        }
      return;
    }
  }
  throw InternalError("for_each_element: bad kind");
}

Rational eigen_one_fraction(const GroupModel& model) {
  std::uint64_t count = 0, order = 0;
  for_each_element(model, [&](const Mat2& g) {
    ++order;
    if (eigen_one(g, model.ell)) ++count;
  });
  if (order != model_order(model))
    throw InternalError("enumeration size " + std::to_string(order) + " disagrees with the closed-form order " +
                        std::to_string(model_order(model)));
  return Rational::of_counts(static_cast<__int128>(count), static_cast<__int128>(order));
}

Rational coupled_mismatch_fraction(const GroupModel& m1, const GroupModel& m2) {
  if (m1.ell != m2.ell) throw UserError("coupled models must share the same ell");
  const std::uint64_t l = m1.ell;
  const std::uint64_t n1 = model_order(m1);
  const std::uint64_t n2 = model_order(m2);
  if (static_cast<unsigned __int128>(n1) * n2 > static_cast<unsigned __int128>(100000000) / (l - 1))
    throw UserError("coupled enumeration too large: |G||G'| must stay below 10^8/(ell-1)");

  // Bucket each factor by determinant; the fiber product pairs elements of
  // equal determinant, so only per-class counts matter.
  struct Bucket {
    std::uint64_t n = 0;  // elements with this det
    std::uint64_t e = 0;  // of those, det(g-1) = 0
  };
  const auto buckets = [&](const GroupModel& m) {
    std::vector<Bucket> by_det(l);
    for_each_element(m, [&](const Mat2& g) {
      Bucket& bk = by_det[det_mod(g, l)];
      ++bk.n;
      if (eigen_one(g, l)) ++bk.e;
    });
    return by_det;
  };
  const auto b1 = buckets(m1);
  const auto b2 = buckets(m2);

  __int128 num = 0, den = 0;
  for (std::uint64_t delta = 1; delta < l; ++delta) {
    const auto& x = b1[delta];
    const auto& y = b2[delta];
    num += static_cast<__int128>(x.e) * (y.n - y.e) + static_cast<__int128>(x.n - x.e) * y.e;
    den += static_cast<__int128>(x.n) * y.n;
  }
  if (den == 0) throw InternalError("coupled fiber product is empty");
  return Rational::of_counts(num, den);
}

ChebotarevComparison predict_vs_observe(const RationalCurve& E, const GroupModel& model, std::uint64_t ell,
                                        std::uint64_t B, const std::vector<TraceRow>& rows, bool force_model) {
  if (ell != model.ell)
    throw UserError("requested ell = " + std::to_string(ell) + " does not match the model's ell = " +
                    std::to_string(model.ell));
  if (has_cm_j_invariant(E) && !force_model)
    throw UserError("curve '" + E.label +
                    "' has complex multiplication; its mod-ell image is not generic and the naive density "
                    "does not apply (pass force_model to override)");

  ChebotarevComparison out;
  out.predicted = eigen_one_fraction(model);
  std::uint64_t hits = 0, n = 0;
  for (const TraceRow& row : rows) {
    if (row.p > B) break;
    ++n;
    const std::uint64_t N = static_cast<std::uint64_t>(static_cast<std::int64_t>(row.p + 1) - row.a);
    if (N % ell == 0) ++hits;
  }
  if (n == 0) throw EmptySampleError("no good primes <= " + std::to_string(B));
  out.observed = Rational::of_counts(static_cast<__int128>(hits), static_cast<__int128>(n));
  const double pr = out.predicted.to_double();
  out.sigma = std::sqrt(pr * (1.0 - pr) / static_cast<double>(n));
  out.primes_tested = n;
  return out;
}

}  // namespace isoradix
