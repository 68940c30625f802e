#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace qnoise {

/// SplitMix64: the output is a bijective hash of a counter that advances by a
/// fixed odd increment, so nearby seeds give statistically independent
/// streams. This is the project-wide generator; ensembles key trajectory k
/// with seed = base_seed + k.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [2^-53, 1]; the zero case is mapped up so log(u) stays finite.
  double next_uniform() {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
  }

  /// Box-Muller pair: two N(0,1) deviates from two uniforms, drawn in a fixed
  /// order so output is a pure function of the seed.
  void next_normal_pair(double& z0, double& z1) {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    z0 = r * std::cos(phi);
    z1 = r * std::sin(phi);
  }

  void fill_normals(std::span<double> out) {
    std::size_t i = 0;
    double a, b;
    for (; i + 1 < out.size(); i += 2) {
      next_normal_pair(a, b);
      out[i] = a;
      out[i + 1] = b;
    }
    if (i < out.size()) {
      next_normal_pair(a, b);
      out[i] = a;
    }
  }

 private:
  std::uint64_t state_;
};

inline std::vector<double> standard_normals(std::size_t n, std::uint64_t seed) {
  std::vector<double> out(n);
  SplitMix64 rng(seed);
  rng.fill_normals(out);
  return out;
}

}  // namespace qnoise
