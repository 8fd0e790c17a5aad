#pragma once

// Brute-force reference routines for tests. Nothing here shares a code path
// with the solver: pairings are read entry by entry, forms are built up one
// basis vector at a time through the refinement law, and twists are applied
// one by one on plain bit arrays.

#include <algorithm>
#include <functional>
#include <vector>

#include "twistframe/heegaard.hpp"

namespace twistframe::oracle {

inline constexpr std::size_t kMaxSubsetCurves = 20;
inline constexpr std::size_t kMaxExhaustiveDimension = 10;

using Bits = std::vector<bool>;

inline Bits to_bits(const BitVector& v) {
  Bits out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v.get(i);
  }
  return out;
}

inline BitVector from_bits(const Bits& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    v.set(i, bits[i]);
  }
  return v;
}

/// sum_{i,j} x_i Q[i][j] y_j, entry by entry.
inline bool pairing(const BitMatrix& q, const Bits& x, const Bits& y) {
  bool acc = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      acc ^= x[i] && y[j] && q.get(i, j);
    }
  }
  return acc;
}

/// Grows x one basis vector at a time: g(acc + e_i) = g(acc) + v_i + acc.e_i.
inline HValue refinement_value(const QuadraticRefinement& g, const Bits& x) {
  const std::size_t d = x.size();
  Bits acc(d, false);
  HValue value;
  for (std::size_t i = 0; i < d; ++i) {
    if (!x[i]) {
      continue;
    }
    Bits unit(d, false);
    unit[i] = true;
    value = value + g.basis_value(i) + HValue::embed(pairing(g.space().pairing(), acc, unit));
    acc[i] = true;
  }
  return value;
}

inline Bits transvect(const BitMatrix& q, Bits x, const Bits& a) {
  if (pairing(q, x, a)) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = x[i] != a[i];
    }
  }
  return x;
}

/// Every epsilon whose twists (ascending index order) make g vanish on all
/// b-curves, sorted lexicographically as bit-strings.
inline std::vector<BitVector> brute_force_twists(const HeegaardDiagram& dia) {
  const std::size_t n = dia.curve_count();
  if (n > kMaxSubsetCurves) {
    throw CapacityError("brute_force_twists: " + std::to_string(n) + " curves exceeds " +
                        std::to_string(kMaxSubsetCurves));
  }
  const BitMatrix& q = dia.space().pairing();
  std::vector<Bits> a_bits;
  std::vector<Bits> b_bits;
  for (const auto& a : dia.a_curves) a_bits.push_back(to_bits(a));
  for (const auto& b : dia.b_curves) b_bits.push_back(to_bits(b));

  std::vector<BitVector> feasible;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t k = 0; k < b_bits.size() && ok; ++k) {
      Bits x = b_bits[k];
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask >> j) & 1U) {
          x = transvect(q, std::move(x), a_bits[j]);
        }
      }
      ok = refinement_value(dia.form, x) == HValue{};
    }
    if (ok) {
      BitVector eps(n);
      for (std::size_t j = 0; j < n; ++j) {
        eps.set(j, (mask >> j) & 1U);
      }
      feasible.push_back(std::move(eps));
    }
  }
  std::ranges::sort(feasible, [](const BitVector& l, const BitVector& r) { return lex_less(l, r); });
  return feasible;
}

using Evaluator = std::function<HValue(const QuadraticRefinement&, const BitVector&)>;

/// Checks the refinement law on all 4^d pairs and 2 g(x) = x.x on all 2^d
/// vectors, using `evaluate` for g and an entrywise pairing.
inline ValidationReport exhaustive_form_check(const QuadraticRefinement& g, const Evaluator& evaluate) {
  const std::size_t d = g.dimension();
  if (d > kMaxExhaustiveDimension) {
    throw CapacityError("exhaustive_form_check: dimension " + std::to_string(d) + " exceeds " +
                        std::to_string(kMaxExhaustiveDimension));
  }
  const std::size_t count = std::size_t{1} << d;
  std::vector<Bits> vecs(count, Bits(d, false));
  std::vector<HValue> values(count);
  for (std::size_t m = 0; m < count; ++m) {
    for (std::size_t i = 0; i < d; ++i) {
      vecs[m][i] = (m >> i) & 1U;
    }
    values[m] = evaluate(g, from_bits(vecs[m]));
  }
  ValidationReport report;
  const BitMatrix& q = g.space().pairing();
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = 0; y < count; ++y) {
      if (values[x ^ y] != values[x] + values[y] + HValue::embed(pairing(q, vecs[x], vecs[y]))) {
        report.fail("additivity", "g(x+y) != g(x) + g(y) + x.y", {from_bits(vecs[x]), from_bits(vecs[y])});
        return report;
      }
    }
    if (values[x] + values[x] != HValue::embed(pairing(q, vecs[x], vecs[x]))) {
      report.fail("doubling", "2 g(x) != x.x", {from_bits(vecs[x])});
      return report;
    }
  }
  return report;
}

inline ValidationReport exhaustive_form_check(const QuadraticRefinement& g) {
  return exhaustive_form_check(g, [](const QuadraticRefinement& form, const BitVector& x) {
    return eval_form(form, x);
  });
}

}  // namespace twistframe::oracle
