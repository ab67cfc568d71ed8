#pragma once

#include <cstdint>

namespace dynforge {

// Deterministic, platform-independent PRNG. std::mt19937 +
// std::uniform_int_distribution is not bit-stable across standard libraries,
// and seeded reproducibility is part of the search contract, so we carry our
// own generator: xoshiro256** seeded through SplitMix64 (the reference
// seeding procedure), with rejection sampling for unbiased ranges.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Unbiased value in [0, n) via rejection sampling; n >= 1.
  uint64_t uniform_below(uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  // Inclusive range [lo, hi].  Returns long so the result converts
  // directly to mpz_class, which lacks long long constructors.
  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(
                    uniform_below(static_cast<uint64_t>(hi - lo) + 1));
  }

  // 53-bit mantissa double in [0, 1).
  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  static constexpr const char* name = "xoshiro256**";

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

}  // namespace dynforge
