#pragma once

// Bit-packed linear algebra over the two-element field.
//
// Vectors and matrix rows are packed 64 coordinates per machine word, with
// coordinate i stored in bit (i % 64) of word (i / 64). Bits past the logical
// length are always zero, so word-wise equality and popcount are exact.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "twistframe/errors.hpp"

namespace twistframe::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

  /// Parses a string of '0'/'1' characters; character i is coordinate i.
  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i);
      } else if (bits[i] != '0') {
        throw ParseError("bit-string contains '" + std::string(1, bits[i]) + "' at position " +
                         std::to_string(i));
      }
    }
    return v;
  }

  static BitVector unit(std::size_t length, std::size_t index) {
    BitVector v(length);
    v.set(index);
    return v;
  }

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  bool operator[](std::size_t i) const { return get(i); }

  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  BitVector& operator^=(const BitVector& other) {
    require_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] ^= other.words_[w];
    }
    return *this;
  }
  BitVector& operator+=(const BitVector& other) { return *this ^= other; }
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator+(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t total = 0;
    for (Word w : words_) {
      total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  /// Calls fn(i) for every coordinate i equal to 1, in increasing order.
  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::string to_string() const {
    std::string s(length_, '0');
    for_each_set([&](std::size_t i) { s[i] = '1'; });
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// Order of the bit-strings: the first differing coordinate decides, 0 < 1.
  friend bool lex_less(const BitVector& lhs, const BitVector& rhs) {
    lhs.require_same_length(rhs);
    for (std::size_t w = 0; w < lhs.words_.size(); ++w) {
      const Word diff = lhs.words_[w] ^ rhs.words_[w];
      if (diff != 0) {
        return (rhs.words_[w] >> std::countr_zero(diff)) & 1U;
      }
    }
    return false;
  }

 private:
  void require_same_length(const BitVector& other) const {
    if (other.length_ != length_) {
      throw DimensionError("bit vector length mismatch: " + std::to_string(length_) + " vs " +
                           std::to_string(other.length_));
    }
  }

  std::size_t length_ = 0;
  std::vector<Word> words_;
};

inline bool parity_of_and(std::span<const Word> a, std::span<const Word> b) {
  Word acc = 0;
  for (std::size_t w = 0; w < a.size(); ++w) {
    acc ^= a[w] & b[w];
  }
  return std::popcount(acc) & 1;
}

/// Parity of the number of positions where both vectors are 1.
inline bool dot(const BitVector& u, const BitVector& v) {
  if (u.size() != v.size()) {
    throw DimensionError("dot: length mismatch " + std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()));
  }
  return parity_of_and(u.words(), v.words());
}

/// Dense row-major matrix; every row occupies the same number of words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, i);
    }
    return m;
  }

  /// Builds a matrix with `cols` columns whose rows are the given vectors.
  static BitMatrix from_rows(std::span<const BitVector> rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      m.set_row(r, rows[r]);
    }
    return m;
  }

  static BitMatrix from_strings(std::span<const std::string> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      m.set_row(r, BitVector::from_string(rows[r]));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const Word> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<Word> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

  BitVector row(std::size_t r) const {
    BitVector v(cols_);
    std::ranges::copy(row_words(r), v.words().begin());
    return v;
  }

  void set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) {
      throw DimensionError("set_row: row length " + std::to_string(v.size()) + " but matrix has " +
                           std::to_string(cols_) + " columns");
    }
    std::ranges::copy(v.words(), row_words(r).begin());
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      row(r).for_each_set([&](std::size_t c) { t.set(c, r); });
    }
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Component k of the result is dot(row_k(m), x).
inline BitVector mat_apply(const BitMatrix& m, const BitVector& x) {
  if (m.cols() != x.size()) {
    throw DimensionError("mat_apply: matrix has " + std::to_string(m.cols()) +
                         " columns, vector has length " + std::to_string(x.size()));
  }
  BitVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (parity_of_and(m.row_words(r), x.words())) {
      out.set(r);
    }
  }
  return out;
}

namespace detail {

// Reduced row echelon form computed in place. Pivot choice is fixed: columns
// left to right, the first remaining row (top-down) with a 1 in that column.
// Each pivot is cleared from every other row, so the result is fully reduced.
// When `track` is set, combo row r records which original rows sum to row r.
struct Echelon {
  BitMatrix reduced;
  BitVector rhs;
  BitMatrix combo;
  std::vector<std::size_t> pivot_cols;

  Echelon(BitMatrix m, BitVector t, bool track)
      : reduced(std::move(m)), rhs(std::move(t)), combo(track ? BitMatrix::identity(reduced.rows()) : BitMatrix{}) {
    const std::size_t rows = reduced.rows();
    const std::size_t cols = reduced.cols();
    const std::size_t stride = reduced.stride();
    const bool have_rhs = rhs.size() == rows;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
      const std::size_t cw = c / kWordBits;
      const Word cm = Word{1} << (c % kWordBits);
      std::size_t found = pivot_row;
      while (found < rows && (reduced.row_words(found)[cw] & cm) == 0) {
        ++found;
      }
      if (found == rows) {
        continue;
      }
      if (found != pivot_row) {
        swap_rows(found, pivot_row, have_rhs, track);
      }
      const auto prow = reduced.row_words(pivot_row);
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == pivot_row) {
          continue;
        }
        auto target = reduced.row_words(r);
        if ((target[cw] & cm) == 0) {
          continue;
        }
        for (std::size_t w = cw; w < stride; ++w) {
          target[w] ^= prow[w];
        }
        if (have_rhs && rhs.get(pivot_row)) {
          rhs.flip(r);
        }
        if (track) {
          auto dst = combo.row_words(r);
          const auto src = combo.row_words(pivot_row);
          for (std::size_t w = 0; w < dst.size(); ++w) {
            dst[w] ^= src[w];
          }
        }
      }
      pivot_cols.push_back(c);
      ++pivot_row;
    }
  }

  std::size_t rank() const { return pivot_cols.size(); }

  std::vector<BitVector> kernel_basis() const {
    const std::size_t cols = reduced.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) {
      is_pivot[c] = true;
    }
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
      if (is_pivot[f]) {
        continue;
      }
      BitVector v = BitVector::unit(cols, f);
      for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        if (reduced.get(r, f)) {
          v.set(pivot_cols[r]);
        }
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b, bool have_rhs, bool track) {
    std::ranges::swap_ranges(reduced.row_words(a), reduced.row_words(b));
    if (have_rhs) {
      const bool ta = rhs.get(a);
      rhs.set(a, rhs.get(b));
      rhs.set(b, ta);
    }
    if (track) {
      std::ranges::swap_ranges(combo.row_words(a), combo.row_words(b));
    }
  }
};

}  // namespace detail

struct RankKernel {
  std::size_t rank = 0;
  std::vector<BitVector> kernel_basis;
};

inline RankKernel rank_kernel(const BitMatrix& m) {
  detail::Echelon e(m, BitVector{}, false);
  return {e.rank(), e.kernel_basis()};
}

inline std::size_t rank(const BitMatrix& m) { return detail::Echelon(m, BitVector{}, false).rank(); }

/// Solution set of M x = t: particular + span(kernel_basis). Free variables
/// of the particular solution are 0.
struct Solution {
  BitVector particular;
  std::vector<BitVector> kernel_basis;
};

/// Certificate that M x = t has no solution: a set of rows of M (indicator
/// `witness`) summing to the zero row while the matching entries of t sum to 1.
struct Unsolvable {
  BitVector witness;
};

using SolveResult = std::variant<Solution, Unsolvable>;

inline SolveResult solve(const BitMatrix& m, const BitVector& t) {
  if (m.rows() != t.size()) {
    throw DimensionError("solve: matrix has " + std::to_string(m.rows()) +
                         " rows, target has length " + std::to_string(t.size()));
  }
  detail::Echelon e(m, t, true);
  for (std::size_t r = e.rank(); r < m.rows(); ++r) {
    if (e.rhs.get(r)) {
      return Unsolvable{e.combo.row(r)};
    }
  }
  BitVector particular(m.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.rhs.get(r)) {
      particular.set(e.pivot_cols[r]);
    }
  }
  return Solution{std::move(particular), e.kernel_basis()};
}

/// Checks an Unsolvable witness against the original system.
inline bool certifies_inconsistency(const BitMatrix& m, const BitVector& t, const Unsolvable& u) {
  if (u.witness.size() != m.rows() || t.size() != m.rows()) {
    return false;
  }
  BitVector combined(m.cols());
  u.witness.for_each_set([&](std::size_t r) { combined ^= m.row(r); });
  return combined.none() && dot(u.witness, t);
}

}  // namespace twistframe::gf2
