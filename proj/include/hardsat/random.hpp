#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace hardsat {

/// SplitMix64 finalizer. Used to derive independent per-trial seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based seed derivation: the seed of stream `index` depends only on
/// (master, index), so trials can run in any order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// Seeded source of uniform draws. Identical seed and call sequence give
/// identical results on every platform (the bounded draw does not rely on
/// std::uniform_int_distribution, whose algorithm is unspecified).
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  /// Number of 64-bit words consumed so far.
  std::uint64_t position() const { return position_; }

  std::uint64_t next() {
    ++position_;
    return engine_();
  }

  /// Uniform integer in [0, n). n == 1 consumes nothing. Requires n >= 1.
  std::size_t uniform(std::size_t n) {
    if (n <= 1)
      return 0;
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace hardsat
