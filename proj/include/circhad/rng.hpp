#ifndef CIRCHAD_RNG_HPP
#define CIRCHAD_RNG_HPP

#include <cstdint>

namespace circhad {

// SplitMix64 (Steele, Lea, Flood 2014). State advances by the golden-ratio
// increment; output is the Stafford variant-13 mix of the new state. Every
// seeded construction and search in the library draws from this generator so
// results are identical on every platform.
class SplitMix64 {
public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  constexpr double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// +1 or -1 from the top bit.
  constexpr int sign() noexcept { return (next() >> 63) ? -1 : 1; }

private:
  std::uint64_t state_;
};

/// Independent stream for sub-task `index` of a run seeded with `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 g(seed ^ (index * 0xD1B54A32D192ED03ULL));
  g.next();
  return g.next();
}

}  // namespace circhad

#endif
