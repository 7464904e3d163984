#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "qgeo/vec.hpp"

namespace qgeo {

// Deterministic counter-based generator used by the verification engine and
// the sampling tests. The n-th output (n = 1, 2, ...) of stream k under seed
// s is
//
//   mix64(key + n * GAMMA),  key = mix64(s ^ mix64(k + GAMMA))
//
// with GAMMA = 0x9e3779b97f4a7c15 and mix64 the SplitMix64 finalizer
// (Steele, Lea & Flood 2014). Outputs depend only on (seed, stream, n), so
// results are identical for any worker count and shard order. The algorithm
// is part of the report format contract: changing it changes every seeded
// result, so it must not be altered silently.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(seed ^ mix64(stream + kGamma))), counter_(0) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGamma); }

  // Uniform double in [0, 1), 53 mantissa bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform double in (0, 1]; safe as a logarithm argument.
  double next_unit_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller. std::normal_distribution is
  // implementation-defined, so it is not used here.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(next_unit_open()));
    const double t = 2.0 * std::numbers::pi * next_unit();
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // Direction uniform on S^2 via normalized Gaussian triples.
  Vec3 unit_vector3() {
    while (true) {
      const Vec3 g{next_gaussian(), next_gaussian(), next_gaussian()};
      const double n = norm(g);
      if (n > 1e-12) return scaled(g, 1.0 / n);
    }
  }

  // Uniform point of the ball of the given radius: uniform direction,
  // radius r = cap * u^{1/3}.
  Vec3 ball3(double radius_cap) {
    const Vec3 dir = unit_vector3();
    return scaled(dir, radius_cap * std::cbrt(next_unit()));
  }

  Vec4 gaussian4() {
    return {next_gaussian(), next_gaussian(), next_gaussian(), next_gaussian()};
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace qgeo
