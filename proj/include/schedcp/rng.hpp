#ifndef SCHEDCP_RNG_HPP_
#define SCHEDCP_RNG_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace schedcp {

// All simulation randomness flows from one 64-bit master seed through named
// sub-streams, so reruns with the same seed are byte-identical and individual
// modules can be re-seeded independently. Distribution transforms are
// hand-rolled on top of mt19937_64 because the std::*_distribution
// implementations are not pinned by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n). n must be positive.
  int uniform_int(int n) {
    return static_cast<int>(uniform01() * static_cast<double>(n));
  }

  // Standard normal via Box-Muller (cosine branch).
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Circularly symmetric complex Gaussian with E[|z|^2] = variance.
  // Uses both Box-Muller branches so one draw consumes two uniforms.
  std::complex<double> complex_normal(double variance) {
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-std::log(u1) * variance);
    const double th = 6.283185307179586476925287 * u2;
    return {r * std::cos(th), r * std::sin(th)};
  }

 private:
  std::mt19937_64 eng_;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace detail

// Seed for a named sub-stream of a master seed. Distinct (name, salt) pairs
// give statistically independent streams.
inline std::uint64_t substream_seed(std::uint64_t master, std::string_view name,
                                    std::uint64_t salt = 0) {
  std::uint64_t s = master ^ detail::fnv1a64(name);
  s = detail::splitmix64(s);
  s = detail::splitmix64(s ^ salt);
  return s;
}

}  // namespace schedcp

#endif  // SCHEDCP_RNG_HPP_
