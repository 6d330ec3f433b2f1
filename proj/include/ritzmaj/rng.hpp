#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace ritzmaj {

// Deterministic xoshiro-free generator: splitmix64 state advance with
// explicit uniform/gaussian conversions, so streams are identical across
// platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9E3779B97F4A7C15ULL) {}

  // Derives an independent stream, e.g. per (seed, trial-index).
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    Rng base(seed);
    std::uint64_t a = base.next_u64();
    Rng mix(a ^ (index * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL));
    return mix;
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Index in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(next_u64() % n);
  }

  bool coin(double p = 0.5) { return uniform() < p; }

  // Box-Muller; one fresh pair per two calls.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ritzmaj
