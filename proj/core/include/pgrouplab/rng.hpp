#ifndef PGROUPLAB_RNG_HPP
#define PGROUPLAB_RNG_HPP

#include <random>

#include "pgrouplab/common.hpp"

namespace pgrouplab {

/// splitmix64; used to derive stream-specific seeds from a master seed.
inline u64 mix_seed(u64 seed, u64 salt) {
  u64 z = seed + salt * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic RNG. Bounded draws use rejection sampling on raw mt19937_64
/// output rather than std::uniform_int_distribution, whose mapping is not
/// pinned by the standard; identical seeds must replay identical streams.
class Rng {
 public:
  explicit Rng(u64 seed) : eng_(seed) {}

  u64 next() { return eng_(); }

  /// Uniform draw from [0, n). n must be positive.
  u64 below(u64 n) {
    if (n == 0) throw PropertyError("Rng::below(0)");
    if (n == 1) return 0;
    const u64 limit = UINT64_MAX - UINT64_MAX % n;
    u64 v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  bool coin() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace pgrouplab

#endif
