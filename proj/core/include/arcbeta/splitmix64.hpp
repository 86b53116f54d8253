#ifndef ARCBETA_SPLITMIX64_HPP
#define ARCBETA_SPLITMIX64_HPP

#include <cstdint>

namespace arcbeta {

// SplitMix64 (Steele, Lea, Vigna, 2014). Chosen as the project's pinned
// generator: 64-bit state, trivially seedable, and splittable into
// independent streams in O(1). Sampled sequences are reproducible across
// releases as long as this algorithm stays fixed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0, 1): ((next() >> 11) + 0.5) * 2^-53,
  // so 0 and 1 are never produced.
  double next_unit_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Seed for the stream-th derived generator: equal to the (stream+1)-th raw
// output of SplitMix64(seed), computed in O(1) since the state advances by a
// fixed increment per draw.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace arcbeta

#endif  // ARCBETA_SPLITMIX64_HPP
