#pragma once

// The coefficient group H = (1/2 Z)/(2 Z), inner-product spaces over Z/2 and
// quadratic refinements g with g(x + y) = g(x) + g(y) + x.y.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "twistframe/errors.hpp"
#include "twistframe/gf2.hpp"
#include "twistframe/validation.hpp"

namespace twistframe {

using gf2::BitMatrix;
using gf2::BitVector;

/// Element of H stored in half-units: q in {0,1,2,3} stands for q/2.
/// Integral values (annulus classes) have even q; Z/2 sits inside H as {0, 2}.
class HValue {
 public:
  constexpr HValue() = default;

  static constexpr HValue from_q(long long q) { return HValue(static_cast<std::uint8_t>(((q % 4) + 4) % 4)); }
  /// Image of an intersection number under Z/2 -> H.
  static constexpr HValue embed(bool bit) { return HValue(bit ? 2 : 0); }

  constexpr int q() const { return q_; }
  constexpr bool integral() const { return (q_ & 1U) == 0; }
  /// Reading of an integral value as an element of Z/2.
  constexpr bool as_bit() const { return q_ == 2; }

  constexpr HValue operator+(HValue o) const { return from_q(q_ + o.q_); }
  constexpr HValue operator-(HValue o) const { return from_q(q_ - o.q_); }
  constexpr HValue operator-() const { return from_q(-static_cast<int>(q_)); }
  constexpr HValue& operator+=(HValue o) { return *this = *this + o; }
  constexpr bool operator==(const HValue&) const = default;

  std::string to_string() const {
    static constexpr std::array<const char*, 4> kNames{"0", "1/2", "1", "3/2"};
    return kNames[q_];
  }

 private:
  constexpr explicit HValue(std::uint8_t q) : q_(q) {}
  std::uint8_t q_ = 0;
};

/// A based Z/2 vector space with a bilinear pairing, entry (i, j) = e_i . e_j.
/// The pairing matrix is shared between copies; it is never mutated.
class InnerSpace {
 public:
  InnerSpace() : pairing_(std::make_shared<const BitMatrix>()) {}
  explicit InnerSpace(BitMatrix pairing) {
    if (pairing.rows() != pairing.cols()) {
      throw DimensionError("pairing matrix must be square, got " + std::to_string(pairing.rows()) + "x" +
                           std::to_string(pairing.cols()));
    }
    pairing_ = std::make_shared<const BitMatrix>(std::move(pairing));
  }

  /// Genus-n orientable normal form: n diagonal blocks [[0,1],[1,0]].
  static InnerSpace standard_symplectic(std::size_t genus) {
    BitMatrix q(2 * genus, 2 * genus);
    for (std::size_t k = 0; k < genus; ++k) {
      q.set(2 * k, 2 * k + 1);
      q.set(2 * k + 1, 2 * k);
    }
    return InnerSpace(std::move(q));
  }

  /// Identity pairing: every basis class is one-sided.
  static InnerSpace diagonal(std::size_t k) { return InnerSpace(BitMatrix::identity(k)); }

  std::size_t dimension() const { return pairing_->rows(); }
  const BitMatrix& pairing() const { return *pairing_; }

  /// The vector Q a, whose coordinate i is e_i . a.
  BitVector pair_with(const BitVector& a) const { return gf2::mat_apply(*pairing_, a); }

  void require_vector(const BitVector& x, const char* what) const {
    if (x.size() != dimension()) {
      throw DimensionError(std::string(what) + ": vector length " + std::to_string(x.size()) +
                           " in a space of dimension " + std::to_string(dimension()));
    }
  }

  friend bool operator==(const InnerSpace& a, const InnerSpace& b) {
    return a.pairing_ == b.pairing_ || *a.pairing_ == *b.pairing_;
  }

 private:
  std::shared_ptr<const BitMatrix> pairing_;
};

/// x^T Q y over Z/2.
inline bool intersection(const InnerSpace& space, const BitVector& x, const BitVector& y) {
  space.require_vector(x, "intersection");
  space.require_vector(y, "intersection");
  const BitMatrix& q = space.pairing();
  gf2::Word acc = 0;
  x.for_each_set([&](std::size_t i) {
    const auto row = q.row_words(i);
    const auto yw = y.words();
    for (std::size_t w = 0; w < row.size(); ++w) {
      acc ^= row[w] & yw[w];
    }
  });
  return std::popcount(acc) & 1;
}

inline ValidationReport validate_space(const InnerSpace& space) {
  ValidationReport report;
  const BitMatrix& q = space.pairing();
  const std::size_t d = space.dimension();
  if (!(q.transpose() == q)) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        if (q.get(i, j) != q.get(j, i)) {
          report.fail("symmetry",
                      "pairing entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs from (" +
                          std::to_string(j) + "," + std::to_string(i) + ")",
                      {BitVector::unit(d, i), BitVector::unit(d, j)});
          return report;
        }
      }
    }
  }
  const auto rk = gf2::rank_kernel(q);
  if (rk.rank != d) {
    report.fail("non_degeneracy", "pairing has rank " + std::to_string(rk.rank) + " < dimension " + std::to_string(d),
                {rk.kernel_basis.front()});
  }
  return report;
}

/// A quadratic refinement given by its values on the basis vectors.
class QuadraticRefinement {
 public:
  QuadraticRefinement() = default;
  QuadraticRefinement(InnerSpace space, std::vector<HValue> basis_values)
      : space_(std::move(space)), values_(std::move(basis_values)) {
    if (values_.size() != space_.dimension()) {
      throw DimensionError("refinement needs " + std::to_string(space_.dimension()) + " basis values, got " +
                           std::to_string(values_.size()));
    }
  }

  /// The all-zero assignment; a refinement only when the pairing is symplectic.
  static QuadraticRefinement zero(InnerSpace space) {
    const std::size_t d = space.dimension();
    return {std::move(space), std::vector<HValue>(d)};
  }

  const InnerSpace& space() const { return space_; }
  std::size_t dimension() const { return space_.dimension(); }
  const std::vector<HValue>& basis_values() const { return values_; }
  HValue basis_value(std::size_t i) const { return values_[i]; }

  friend bool operator==(const QuadraticRefinement&, const QuadraticRefinement&) = default;

 private:
  InnerSpace space_;
  std::vector<HValue> values_;
};

/// g(sum_{i in S} e_i) = sum_{i in S} v_i + sum_{i<j in S} embed(Q[i][j]).
inline HValue eval_form(const QuadraticRefinement& g, const BitVector& x) {
  const InnerSpace& space = g.space();
  space.require_vector(x, "eval_form");
  const BitMatrix& q = space.pairing();
  const auto xw = x.words();
  int total = 0;
  gf2::Word pairs = 0;
  x.for_each_set([&](std::size_t i) {
    total += g.basis_value(i).q();
    const auto row = q.row_words(i);
    const std::size_t w0 = i / gf2::kWordBits;
    const std::size_t shift = i % gf2::kWordBits;
    // Only partners j > i.
    const gf2::Word above = shift == gf2::kWordBits - 1 ? 0 : (~gf2::Word{0} << (shift + 1));
    pairs ^= row[w0] & xw[w0] & above;
    for (std::size_t w = w0 + 1; w < row.size(); ++w) {
      pairs ^= row[w] & xw[w];
    }
  });
  return HValue::from_q(total) + HValue::embed(std::popcount(pairs) & 1);
}

/// Checks v_i.q == Q[i][i] (mod 2) for every i; when the dimension is at most
/// `exhaustive_limit`, also checks the refinement law on every pair and
/// 2 g(x) = embed(x.x) on every vector.
inline ValidationReport validate_form(const QuadraticRefinement& g, std::size_t exhaustive_limit = 10) {
  ValidationReport report;
  const std::size_t d = g.dimension();
  const BitMatrix& q = g.space().pairing();
  for (std::size_t i = 0; i < d; ++i) {
    if ((g.basis_value(i).q() & 1) != static_cast<int>(q.get(i, i))) {
      report.fail("parity",
                  "g(e_" + std::to_string(i) + ") = " + g.basis_value(i).to_string() + " but e_" + std::to_string(i) +
                      ".e_" + std::to_string(i) + " = " + std::to_string(q.get(i, i)),
                  {BitVector::unit(d, i)});
    }
  }
  if (d > exhaustive_limit || d >= 31) {
    return report;
  }
  const std::size_t count = std::size_t{1} << d;
  std::vector<BitVector> vectors(count);
  std::vector<HValue> values(count);
  for (std::size_t m = 0; m < count; ++m) {
    BitVector x(d);
    for (std::size_t i = 0; i < d; ++i) {
      if ((m >> i) & 1U) {
        x.set(i);
      }
    }
    values[m] = eval_form(g, x);
    vectors[m] = std::move(x);
  }
  constexpr std::size_t kMaxWitnesses = 4;
  std::size_t additivity_failures = 0;
  for (std::size_t a = 0; a < count && additivity_failures < kMaxWitnesses; ++a) {
    for (std::size_t b = 0; b < count && additivity_failures < kMaxWitnesses; ++b) {
      const HValue rhs = values[a] + values[b] + HValue::embed(intersection(g.space(), vectors[a], vectors[b]));
      if (values[a ^ b] != rhs) {
        ++additivity_failures;
        report.fail("additivity", "g(x+y) = " + values[a ^ b].to_string() + " but g(x)+g(y)+x.y = " + rhs.to_string(),
                    {vectors[a], vectors[b]});
      }
    }
  }
  std::size_t doubling_failures = 0;
  for (std::size_t a = 0; a < count && doubling_failures < kMaxWitnesses; ++a) {
    const HValue twice = values[a] + values[a];
    if (twice != HValue::embed(intersection(g.space(), vectors[a], vectors[a]))) {
      ++doubling_failures;
      report.fail("doubling", "2 g(x) = " + twice.to_string() + " differs from x.x", {vectors[a]});
    }
  }
  return report;
}

/// Brown-type invariant: with S = sum_x i^{q(x)}, returns beta in [0, 8) such
/// that S = 2^{d/2} exp(2 pi i beta / 8). Summation is exact.
inline int gauss_invariant(const QuadraticRefinement& g, std::size_t limit = 24) {
  const std::size_t d = g.dimension();
  if (d > limit || d > 40) {
    throw CapacityError("gauss_invariant: dimension " + std::to_string(d) + " exceeds limit " + std::to_string(limit));
  }
  const BitMatrix& q = g.space().pairing();
  for (std::size_t i = 0; i < d; ++i) {
    if (g.basis_value(i).integral() == q.get(i, i)) {
      throw InvalidFormError("gauss_invariant: basis value " + std::to_string(i) + " has the wrong parity");
    }
  }
  // partner[i]: the j != i paired with i in the upper-triangle closed form.
  std::vector<std::uint64_t> partner(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const bool bit = j > i ? q.get(i, j) : (j < i ? q.get(j, i) : false);
      if (bit) {
        partner[i] |= std::uint64_t{1} << j;
      }
    }
  }
  // Gray-code walk: toggling e_i changes q by +-(v_i + 2 |x & partner_i|).
  std::array<std::int64_t, 4> tally{1, 0, 0, 0};
  std::uint64_t x = 0;
  int current = 0;
  const std::uint64_t count = std::uint64_t{1} << d;
  for (std::uint64_t k = 1; k < count; ++k) {
    const auto i = static_cast<std::size_t>(std::countr_zero(k));
    const int delta = g.basis_value(i).q() + 2 * (std::popcount(x & partner[i]) & 1);
    const std::uint64_t bit = std::uint64_t{1} << i;
    current = (x & bit) ? current - delta : current + delta;
    current = ((current % 4) + 4) % 4;
    x ^= bit;
    ++tally[static_cast<std::size_t>(current)];
  }
  const std::int64_t re = tally[0] - tally[2];
  const std::int64_t im = tally[1] - tally[3];
  // |S|^2 = 2^d, computed without overflow for d <= 40.
  const auto wide = [](std::int64_t v) { return static_cast<__int128>(v) * v; };
  const auto norm = static_cast<unsigned __int128>(wide(re) + wide(im));
  if (norm != (static_cast<unsigned __int128>(1) << d)) {
    throw InvalidFormError("gauss_invariant: |S|^2 = " + std::to_string(static_cast<unsigned long long>(norm)) +
                           " differs from 2^" + std::to_string(d) + "; the form violates the refinement law");
  }
  // A Gaussian integer of norm 2^d is a unit times (1+i)^d, so S points along
  // one of the eight directions.
  if (im == 0) return re > 0 ? 0 : 4;
  if (re == 0) return im > 0 ? 2 : 6;
  if (re == im) return re > 0 ? 1 : 5;
  return re < 0 ? 3 : 7;
}

}  // namespace twistframe
