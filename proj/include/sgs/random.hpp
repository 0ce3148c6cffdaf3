#pragma once

#include <cstdint>
#include <random>

namespace sgs {

// Seedable RNG with draw helpers that do not depend on libstdc++
// distribution internals, so identical seeds give identical streams
// on any platform. Backed by std::mt19937_64 (whose output sequence
// is fixed by the standard).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return eng_(); }

  // uniform in [0,1) with 53-bit resolution
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // uniform integer in [0, n); n > 0. Modulo bias is < n/2^64, irrelevant here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::mt19937_64 eng_;
  std::uint64_t seed_;
};

}  // namespace sgs
