#ifndef SPLITCOLOR_RNG_HPP
#define SPLITCOLOR_RNG_HPP

#include <cstdint>

namespace splitcolor {

// SplitMix64. The reference stream: state advances by 0x9E3779B97F4A7C15,
// output is the finalizer below. Bounded draws use plain modulo. Any
// reimplementation (other languages, test harnesses) must follow this
// exactly so that seeded instances are bit-identical everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, n); n must be positive.
  uint64_t below(uint64_t n) { return next() % n; }

  // Fisher-Yates over the first `size` entries of an index container.
  template <class Vec>
  void shuffle(Vec& v) {
    for (size_t i = v.size(); i > 1; i--) {
      size_t j = below(i);
      auto tmp = v[i - 1];
      v[i - 1] = v[j];
      v[j] = tmp;
    }
  }

 private:
  uint64_t state_;
};

}  // namespace splitcolor

#endif
