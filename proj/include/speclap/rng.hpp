#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace speclap {

// Deterministic generator for every randomized constructor: mt19937_64 seeded
// directly, 53-bit uniforms, Box-Muller normals. No standard-library
// distributions are used, so identical seeds give identical draws on any
// conforming standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1].
  double uniform_pos() { return double((engine_() >> 11) + 1) * 0x1.0p-53; }

  // Inclusive integer range.
  int uniform_int(int lo, int hi) {
    return lo + int(double(hi - lo + 1) * uniform());
  }

  double gaussian() {
    double u = uniform_pos();
    double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
  }

  std::complex<double> cgaussian() {
    double re = gaussian();
    double im = gaussian();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
  }

private:
  std::mt19937_64 engine_;
};

} // namespace speclap
