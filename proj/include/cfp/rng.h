#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace cfp::rng {

// Counter-addressable generator: every draw is a pure function of
// (key, stream, index), so any partition of the work across threads yields
// the same numbers. The per-stream state is SplitMix64 (Steele, Lea, Flood
// 2014) jumped directly to `index`.
inline constexpr std::string_view kGeneratorName = "splitmix64-counter/v1";

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 output function; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Child seed for sub-experiment `index`. Since mix64 is a bijection, distinct
// indices under one parent seed give distinct children.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  return parent ^ mix64(index + kGolden);
}

constexpr double to_unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

class Stream {
 public:
  constexpr Stream(std::uint64_t key, std::uint64_t stream)
      : state_(mix64(key ^ mix64(stream * kGolden + 0x632BE59BD9B4E019ULL))) {}

  constexpr std::uint64_t bits(std::uint64_t index) const {
    return mix64(state_ + (index + 1) * kGolden);
  }

  // Uniform on [0, 1).
  constexpr double uniform(std::uint64_t index) const { return to_unit_interval(bits(index)); }

  // Standard normal via Box-Muller on draws (2*index, 2*index + 1).
  double normal(std::uint64_t index) const {
    const double u1 = 1.0 - uniform(2 * index);  // (0, 1]
    const double u2 = uniform(2 * index + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace cfp::rng
