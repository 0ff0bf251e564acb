#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dronecell {

// Deterministic random stream.  The engine is mt19937_64 (its state
// evolution is fully specified), and every distribution transform is
// implemented here rather than with std:: distributions, whose internals
// differ between standard-library implementations.  This makes a seeded
// simulation replay bit-for-bit anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(mix(seed)) {}

  // Substream constructor: (master, stream, index) are folded into one
  // well-mixed 64-bit seed.  Distinct tuples give independent streams, so
  // e.g. each user's mobility draws never interleave with traffic draws.
  Rng(std::uint64_t master, std::uint64_t stream, std::uint64_t index)
      : eng_(mix(mix(mix(master) + kGolden * (stream + 1)) + kGolden * (index + 1))) {}

  // Uniform on [0, 1): top 53 bits of one engine output.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Exponential with the given mean; log1p keeps small quantiles accurate.
  double exponential(double mean) { return -mean * std::log1p(-uniform()); }

  std::uint64_t next_raw() { return eng_(); }

  bool operator==(const Rng& other) const { return eng_ == other.eng_; }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  // splitmix64 finalizer; spreads low-entropy seeds over the whole state space.
  static std::uint64_t mix(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::mt19937_64 eng_;
};

}  // namespace dronecell
