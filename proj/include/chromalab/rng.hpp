#pragma once

#include <cstdint>

namespace chromalab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// xoshiro256** seeded via splitmix64.  Hand-rolled so that streams are
/// bit-stable across standard libraries; every randomized operation in the
/// lab draws from this and nothing else.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, bound), unbiased via rejection.  bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_unit() < p; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

/// Per-trial substream: trials are order-independent by contract.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) { return Rng(seed ^ trial); }

/// Stateless per-key coin, used where a sampling decision must not depend on
/// the order in which pairs are examined.
inline bool keyed_coin(std::uint64_t seed, std::uint64_t key, double p) {
  std::uint64_t st = seed ^ (key * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL);
  std::uint64_t v = splitmix64(st);
  return static_cast<double>(v >> 11) * 0x1.0p-53 < p;
}

}  // namespace chromalab
