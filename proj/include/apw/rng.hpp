#pragma once

#include <cstdint>

namespace apw {

// splitmix64. Fixed bit-for-bit across platforms, so every seeded run is
// reproducible; all randomness in the library flows through this.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform on [lo, hi], both ends included
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  long nonzero(long lo, long hi) {
    long v = range(lo, hi);
    while (v == 0) v = range(lo, hi);
    return v;
  }

 private:
  std::uint64_t state_;
};

// Stable sub-seed for (seed, index); used to make trials independent yet
// reproducible regardless of execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xa0761d6478bd642fULL + index * 0xe7037ed1a0b428dbULL));
  return g.next();
}

}  // namespace apw
