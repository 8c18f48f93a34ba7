#pragma once

#include <cstdint>

namespace trackcube {

// splitmix64. Self-contained so generated instances are reproducible across
// platforms and standard-library versions (std distributions are not).
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  int range(int lo, int hi) { return lo + (int)below(uint64_t(hi - lo + 1)); } // inclusive
  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

  // derived stream for instance `index` of a campaign with master `seed`
  static Rng instance(uint64_t seed, uint64_t index) {
    Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    mix.next();
    mix.next();
    return mix;
  }

private:
  uint64_t state_;
};

} // namespace trackcube
