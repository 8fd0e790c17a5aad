#pragma once

#include <cstdint>

namespace twistframe {

/// 64-bit linear congruential generator with Knuth's MMIX constants:
///   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
/// Outputs are the high 32 bits of the new state. The sequence is fully
/// determined by the seed, so generated instances are reproducible anywhere.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit constexpr Lcg64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint32_t next_u32() {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  /// Uniform-ish draw from [0, bound) by multiply-shift; bound must be > 0.
  constexpr std::uint32_t below(std::uint32_t bound) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(next_u32()) * bound) >> 32);
  }

  constexpr bool coin() { return (next_u32() >> 31) != 0; }

  constexpr std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace twistframe
