#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace wavelab {

/// Seeded 64-bit generator with platform-independent variates. The engine is
/// std::mt19937_64, whose output sequence is fixed by the standard; the
/// conversions below avoid the implementation-defined std distributions.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal by Box-Muller (one variate per call).
  double normal() {
    const double a = 1.0 - uniform();
    const double b = uniform();
    return std::sqrt(-2.0 * std::log(a)) * std::cos(2.0 * std::numbers::pi * b);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wavelab
