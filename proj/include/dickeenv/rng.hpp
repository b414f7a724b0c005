#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace dickeenv {

/// Deterministic Gaussian sampler: Box-Muller over std::mt19937_64.
/// The mt19937_64 bit stream is pinned by the standard, and Box-Muller is
/// hand-rolled here because std::normal_distribution's algorithm is
/// implementation-defined — byte-identical outputs across toolchains matter
/// for the seeded-reproducibility contract.
class GaussianDraw {
 public:
  explicit GaussianDraw(std::uint64_t seed) : engine_(seed) {}

  double operator()(double mean, double stddev) { return mean + stddev * standard(); }

  double standard() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1], u2 in [0, 1).
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  double uniform01() {
    // 53-bit mantissa in [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace dickeenv
