#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>

namespace right::samplers {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/**
 * Deterministic pseudo-random stream addressed by (seed, stream_id).
 * The same pair always yields the same sequence; distinct trials take
 * distinct stream ids so they can run concurrently without overlap.
 *
 * All variate generators are implemented on top of the raw engine bits so
 * sequences do not depend on the standard library's distribution internals.
 */
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed),
        stream_id_(stream_id),
        eng_(detail::splitmix64(seed ^ detail::splitmix64(stream_id))) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Derived stream with an independent deterministic state.
  RngStream child(std::uint64_t tag) const {
    return RngStream(seed_,
                     detail::splitmix64(stream_id_ ^ (0xD1B54A32D192ED03ULL *
                                                      (tag + 1))));
  }

  std::uint64_t next_bits() { return eng_(); }

  /// Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in (0, 1]; safe as a log argument.
  double uniform01_pos() { return 1.0 - uniform01(); }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    // Rejection on the top range keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  /// Standard normal via Box-Muller; the partner draw is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01_pos();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  /// Gamma(shape, 1) via Marsaglia-Tsang; shapes below one use the boost
  /// gamma(shape+1) * U^(1/shape).
  double gamma(double shape) {
    if (!(shape > 0.0)) throw std::invalid_argument("gamma: shape <= 0");
    if (shape < 1.0) {
      const double u = uniform01_pos();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform01_pos();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  /// Chi-squared with dof nu: sum of squared normals for integer nu,
  /// gamma(nu/2, 2) otherwise.
  double chi_squared(double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("chi_squared: nu <= 0");
    const double rounded = std::round(nu);
    if (std::abs(nu - rounded) < 1e-12 && rounded <= 64.0) {
      const int k = static_cast<int>(rounded);
      double s = 0.0;
      for (int i = 0; i < k; ++i) {
        const double z = normal();
        s += z * z;
      }
      return s;
    }
    return 2.0 * gamma(0.5 * nu);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace right::samplers
