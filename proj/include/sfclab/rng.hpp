#ifndef SFCLAB_RNG_HPP
#define SFCLAB_RNG_HPP

#include <cstdint>

namespace sfclab {

/// SplitMix64: 64-bit state advanced by the golden-gamma increment, output
/// finalized with the standard xor-shift/multiply mix. Used everywhere a
/// seeded stream is required so generated inputs are reproducible
/// byte-for-byte across platforms.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Residue in [0, p) by modulo reduction. For the field sizes used here
  /// (p < 2^31) the modulo bias is below 2^-33 and irrelevant.
  std::uint32_t next_residue(std::uint32_t p) {
    return static_cast<std::uint32_t>(next() % p);
  }
};

/// Stateless scramble of one value through the SplitMix64 output function;
/// used to derive independent per-cell seeds from (seed, n, trial).
inline std::uint64_t splitmix_scramble(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace sfclab

#endif  // SFCLAB_RNG_HPP
