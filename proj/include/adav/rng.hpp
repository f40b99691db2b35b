#ifndef ADAV_RNG_HPP
#define ADAV_RNG_HPP

#include <cmath>
#include <cstdint>

namespace adav {

// SplitMix64 generator. Self-contained so that seeded runs are byte-identical
// across standard libraries and platforms.
struct Rng {
  uint64_t state = 0x9e3779b97f4a7c15ULL;

  explicit Rng(uint64_t seed = 0) { state = seed + 0x9e3779b97f4a7c15ULL; }

  uint64_t next_u64() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  // Standard normal via Box-Muller (second value discarded for a stateless
  // call pattern).
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // Derive an independent child stream; tag distinguishes consumers so that
  // one named seed per subcommand splits deterministically.
  Rng split(uint64_t tag) const {
    Rng child(state ^ (tag * 0xd6e8feb86659fd93ULL + 0x2545f4914f6cdd1dULL));
    child.next_u64();
    return child;
  }
};

}  // namespace adav

#endif
