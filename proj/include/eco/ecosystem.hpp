#pragma once

// Ecological cycle optimizer: a population split into producers, three
// consumer guilds (herbivores, carnivores, omnivores) and a decomposer buffer.
// Consumers prey on roulette-selected members of lower trophic levels,
// decomposers recycle every member toward the iteration best or by random
// walks, and producers absorb the best of the recycled matter.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eco/problem.hpp"
#include "eco/rng.hpp"
#include "eco/trace.hpp"

namespace eco {

struct Proportions {
  double producers = 0.2;
  double herbivores = 0.3;
  double carnivores = 0.3;
  double omnivores = 0.2;
};

struct EcoConfig {
  std::size_t pop_size = 30;
  Proportions proportions;
  std::size_t max_fes = 300000;
  std::uint64_t seed = 0;
};

struct RoleCounts {
  std::size_t producers = 0;
  std::size_t herbivores = 0;
  std::size_t carnivores = 0;
  std::size_t omnivores = 0;

  std::size_t total() const { return producers + herbivores + carnivores + omnivores; }
  /// Evaluations spent by one full iteration (producers reuse cached values).
  std::size_t fes_per_iteration() const { return herbivores + carnivores + omnivores + total(); }
};

/// Splits pop_size by the configured proportions. Producers, herbivores and
/// carnivores get round(p * N); omnivores take the remainder. A count that
/// ends up below one borrows from the largest group. Throws
/// std::invalid_argument for an invalid configuration.
RoleCounts role_counts(const EcoConfig& config);

/// Iteration ceiling implied by the evaluation budget (at least 1).
std::size_t iteration_limit(const EcoConfig& config);

struct Scored {
  Point position;
  Evaluation eval;
};

struct Individual {
  Point position;
  Evaluation eval;
  Point best_position;
  Evaluation best_eval;

  static Individual from(Point position, Evaluation eval);
};

struct EcoState {
  std::vector<Individual> producers;
  std::vector<Individual> herbivores;
  std::vector<Individual> carnivores;
  std::vector<Individual> omnivores;
  std::vector<Scored> decomposers;  ///< filled once per iteration
  Scored global_best;
  Scored iter_best;
  std::size_t k = 0;
  std::size_t k_max = 0;

  std::size_t size() const {
    return producers.size() + herbivores.size() + carnivores.size() + omnivores.size();
  }
  /// Population members in partition order (producers, herbivores,
  /// carnivores, omnivores).
  std::vector<const Individual*> members() const;
};

// ---------------------------------------------------------------------------
// Predation factor

/// One component 1 + 2u * exp(-9 (k/k_max)^3) * sign, sign in {-1, +1}.
double predation_factor_component(double u, int sign, std::size_t k, std::size_t k_max);

/// Per-dimension predation factor; each component draws a fresh u and sign.
Point predation_factor(std::size_t k, std::size_t k_max, std::size_t dim, Rng& rng);

// ---------------------------------------------------------------------------
// Roulette wheel

/// Positive, order-preserving shift of raw fitness values:
/// f - min + 0.1 (max - min) + 1e-12.
std::vector<double> shifted_fitness(std::span<const double> values);

/// P_i proportional to 1 / f_i for positive f.
std::vector<double> reciprocal_probabilities(std::span<const double> positive_fitness);

/// Selection probabilities for a pool. All-feasible pools use the shifted
/// objective; pools with an infeasible member use 1/rank where rank is the
/// position under compare (ties share the best rank).
std::vector<double> selection_probabilities(std::span<const Evaluation> pool);

/// Cumulative scan: first index with u <= q_i; the last index if rounding
/// leaves q_N below u.
std::size_t roulette_pick(std::span<const double> probabilities, double u);

/// `draws` independent picks with replacement.
std::vector<std::size_t> roulette_select(std::span<const Evaluation> pool, std::size_t draws,
                                         Rng& rng);

// ---------------------------------------------------------------------------
// Update moves (pure given their random inputs)

/// self + G .* sum_t w_t (prey_t - self).
Point predation_move(std::span<const double> self, std::span<const std::span<const double>> prey,
                     std::span<const double> weights, std::span<const double> factor);

/// Stacks producers and decomposers, stable-sorts by compare and keeps the
/// first producers.size() rows.
std::vector<Individual> absorb_nutrients(std::span<const Individual> producers,
                                         std::span<const Scored> decomposers);

/// Neighborhood nei_j = r_j * best_j, result nei + (0.4 r - 0.2)(nei - self).
Point decompose_optimal(std::span<const double> self, std::span<const double> iter_best,
                        std::span<const double> neighbor_rands, double offset_rand);
Point decompose_optimal(std::span<const double> self, std::span<const double> iter_best, Rng& rng);

/// self + r * |best - self| * v / |v|.
Point decompose_local(std::span<const double> self, std::span<const double> iter_best,
                      std::span<const double> direction, double radius_rand);
Point decompose_local(std::span<const double> self, std::span<const double> iter_best, Rng& rng);

/// H(k) = cos(u pi) (1 - k / (1.5 k_max))^(5 k / k_max).
double walk_coefficient(std::size_t k, std::size_t k_max, double u);

/// w_j = (2/3) r_j H scale; result = r_wei self + (1 - r_wei) w.
Point decompose_global(std::span<const double> self, double walk_coeff,
                       std::span<const double> step_rands, double scale, double rand_wei);
Point decompose_global(std::span<const double> self, std::size_t k, std::size_t k_max,
                       const Bounds& bounds, Rng& rng);

/// Replaces the current position on strict improvement and refreshes the
/// personal best. Returns whether the candidate was accepted.
bool greedy_accept(Individual& individual, const Point& candidate, const Evaluation& eval);

// ---------------------------------------------------------------------------

/// One ECO run over a problem. Strictly sequential; the object owns its
/// state, budget and random stream.
class Ecosystem {
 public:
  Ecosystem(const Problem& problem, EcoConfig config);

  /// Samples and evaluates pop_size individuals, partitioned in index order.
  void init();

  void producer_update();
  void herbivore_sweep(std::span<const double> factor);
  void carnivore_sweep(std::span<const double> factor);
  void omnivore_sweep(std::span<const double> factor);
  /// Identifies the iteration best and fills the decomposer buffer.
  void decompose_sweep();

  /// Runs iteration k = state().k + 1. Propagates BudgetExhausted.
  void step();

  /// init + iterate to k_max or budget exhaustion.
  RunResult run();

  const EcoState& state() const { return state_; }
  EcoState& state() { return state_; }
  const EvalBudget& budget() const { return budget_; }
  const RoleCounts& counts() const { return counts_; }
  const Problem& problem() const { return problem_; }

 private:
  Evaluation evaluate_point(const Point& x);
  void consumer_sweep(std::vector<Individual>& guild,
                      const std::vector<std::pair<const std::vector<Individual>*, std::size_t>>& diet,
                      std::span<const double> factor);
  TraceRow trace_row() const;

  const Problem& problem_;
  EcoConfig config_;
  RoleCounts counts_;
  EvalBudget budget_;
  Rng rng_;
  EcoState state_;
};

RunResult run_eco(const Problem& problem, const EcoConfig& config);

}  // namespace eco
