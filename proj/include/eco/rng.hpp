#pragma once

#include <cstdint>
#include <random>

namespace eco {

/// Seedable random stream used by every stochastic component.
///
/// Each optimizer run owns exactly one Rng. A run seeded with `s` draws from
/// mt19937_64 initialized through seed_seq{lo32(s), hi32(s)}; experiments
/// derive per-run seeds as base_seed + run_index, so any single run can be
/// replayed in isolation. Uniforms are assembled from the top 53 bits of the
/// engine output instead of std::uniform_real_distribution, whose algorithm
/// is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Uniform double in [0, 1).
  double uniform();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] (inclusive), unbiased.
  std::int64_t integer(std::int64_t lo, std::int64_t hi);

  /// Standard normal deviate (Box-Muller, no cached second value).
  double normal();

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace eco
