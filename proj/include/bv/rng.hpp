#pragma once

#include <cstdint>
#include <random>

namespace bv {

// Deterministic seeded RNG. mt19937_64 output is pinned by the standard,
// so sampled test cases are reproducible from the seed alone.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // inclusive bounds
  uint32_t uniform(uint32_t lo, uint32_t hi) {
    return lo + static_cast<uint32_t>(eng_() % (static_cast<uint64_t>(hi) - lo + 1));
  }

  bool coin() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace bv
