#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ramsey3 {

// Deterministic random source.  std::mt19937_64 has a fully specified
// algorithm, and the bounded draw below avoids std::uniform_int_distribution
// (whose output is implementation-defined), so identical seeds give identical
// streams on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // Uniform draw from [0, bound) by rejection sampling; bound > 0.
  uint64_t below(uint64_t bound) {
    if (bound == 0) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t r;
    do {
      r = gen_();
    } while (r >= limit);
    return r % bound;
  }

  // Fisher-Yates shuffle driven by below(), hence portable.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Derives an independent substream seed (splitmix64 step over seed ^ f(stream)).
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace ramsey3
