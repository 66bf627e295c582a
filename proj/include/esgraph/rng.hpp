#ifndef ESGRAPH_RNG_HPP
#define ESGRAPH_RNG_HPP

#include <cstdint>

namespace esgraph {

// SplitMix64: 64-bit state, xorshift-multiply output mix.  Constants are the
// standard ones (Steele-Lea-Flood); fixed here so corpora reproduce
// bit-identically across platforms and language ports.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n) by rejection; n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * (~0ull / n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // A statistically independent child generator.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace esgraph

#endif
