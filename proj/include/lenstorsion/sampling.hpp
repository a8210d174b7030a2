#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "lenstorsion/rep_theory.hpp"

namespace lenstorsion {

/// SplitMix64. Chosen for verification grids because its output sequence is fully specified,
/// unlike the standard distributions, so seeded runs agree across platforms.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], by rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform_unit() { return static_cast<double>((*this)() >> 11) * 0x1p-53; }

 private:
  std::uint64_t state_;
};

/// n + 1 weights nu_j in {1, ..., mu}, each coprime to mu.
std::vector<std::int64_t> sample_coprime_weights(SplitMix64& rng, int n, std::int64_t mu);

/// Torus element with `size` coordinates, exponents uniform in {0, ..., mu - 1}.
TorusElement sample_torus_element(SplitMix64& rng, std::int64_t mu, std::size_t size);

}  // namespace lenstorsion
