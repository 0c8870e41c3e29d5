#pragma once

#include <cstddef>
#include <cstdint>

#include "eco/problem.hpp"
#include "eco/trace.hpp"

namespace eco {

/// Global-best particle swarm. Defaults: c1 = c2 = 2, w = 0.8, 30 particles.
struct PsoConfig {
  std::size_t pop_size = 30;
  double c1 = 2.0;
  double c2 = 2.0;
  double w = 0.8;
  /// Per-dimension velocity limit as a fraction of the box width.
  double velocity_clamp = 0.2;
  std::size_t max_fes = 300000;
  std::uint64_t seed = 0;
};

struct Particle {
  Point position;
  Point velocity;
  Evaluation eval;
  Point best_position;
  Evaluation best_eval;
};

/// One velocity/position update for a particle given its random draws
/// (r1, r2 per dimension). Returns the unrepaired new position; the velocity
/// is updated in place and clamped.
Point pso_move(Particle& particle, std::span<const double> global_best, std::span<const double> r1,
               std::span<const double> r2, const PsoConfig& config, const Bounds& bounds);

RunResult run_pso(const Problem& problem, const PsoConfig& config);

}  // namespace eco
