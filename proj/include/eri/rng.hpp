#pragma once

#include <cmath>
#include <cstdint>

namespace eri {

// Splittable deterministic PRNG. SplitMix64 steps are platform-independent,
// so seeded runs reproduce bit-for-bit; independent streams are derived by
// hashing (seed, stream tags) rather than by sharing one sequence.
struct SplitMix64 {
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller; deterministic given the stream.
  double normal(double mean = 0.0, double sigma = 1.0) {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(6.283185307179586 * u2);
  }

  // Knuth inversion; fine for the small rates used here.
  int poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    double l = std::exp(-lambda);
    int k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform();
    } while (p > l);
    return k - 1;
  }
};

// Derives an independent stream seed from a base seed and up to three tags.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t a,
                                std::uint64_t b = 0, std::uint64_t c = 0) {
  SplitMix64 h(seed ^ (a * 0xd6e8feb86659fd93ULL) ^
               (b * 0xa0761d6478bd642fULL) ^ (c * 0xe7037ed1a0b428dbULL));
  h.next();
  return h.next();
}

}  // namespace eri
