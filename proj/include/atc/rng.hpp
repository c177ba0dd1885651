#pragma once

#include <cstdint>

namespace atc {

/// splitmix64. Self-contained so that seeded runs produce identical streams
/// on every platform (the standard distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). Pre: n > 0.
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling to stay exactly uniform.
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

}  // namespace atc
