#include "eco/pso.hpp"

#include <algorithm>
#include <limits>

#include "eco/analysis.hpp"

namespace eco {

Point pso_move(Particle& particle, std::span<const double> global_best, std::span<const double> r1,
               std::span<const double> r2, const PsoConfig& config, const Bounds& bounds) {
  const std::size_t dim = particle.position.size();
  Point next(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const double vmax = config.velocity_clamp * (bounds.upper()[j] - bounds.lower()[j]);
    double v = config.w * particle.velocity[j] +
               config.c1 * r1[j] * (particle.best_position[j] - particle.position[j]) +
               config.c2 * r2[j] * (global_best[j] - particle.position[j]);
    v = std::clamp(v, -vmax, vmax);
    particle.velocity[j] = v;
    next[j] = particle.position[j] + v;
  }
  return next;
}

namespace {

double swarm_diversity(const std::vector<Particle>& swarm) {
  std::vector<Point> positions;
  positions.reserve(swarm.size());
  for (const auto& p : swarm) positions.push_back(p.position);
  return analysis::diversity(positions);
}

}  // namespace

RunResult run_pso(const Problem& problem, const PsoConfig& config) {
  if (config.pop_size == 0) throw std::invalid_argument("pop_size must be positive");
  EvalBudget budget(config.max_fes);
  if (budget.max_fes() < config.pop_size) throw BudgetExhausted();
  Rng rng(config.seed);
  const std::size_t dim = problem.dim();

  RunResult result;
  result.best = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  result.best_position.assign(dim, 0.0);
  auto track = [&](const Point& x, const Evaluation& e) {
    if (better(e, result.best)) {
      result.best = e;
      result.best_position = x;
    }
  };

  std::vector<Particle> swarm(config.pop_size);
  for (auto& p : swarm) {
    p.position = sample_uniform(problem.bounds, rng);
    p.velocity.assign(dim, 0.0);
    p.eval = evaluate(problem, p.position, budget, rng);
    p.best_position = p.position;
    p.best_eval = p.eval;
    track(p.position, p.eval);
  }
  auto row = [&](std::size_t iter) {
    return TraceRow{iter, budget.used(), result.best.value, result.best.violation,
                    swarm_diversity(swarm)};
  };
  result.trace.rows.push_back(row(0));

  Point r1(dim);
  Point r2(dim);
  std::size_t iter = 0;
  bool done = false;
  while (!done && !budget.exhausted()) {
    ++iter;
    // the swarm follows the best personal best seen so far
    const Point gbest = result.best_position;
    try {
      for (auto& p : swarm) {
        for (std::size_t j = 0; j < dim; ++j) {
          r1[j] = rng.uniform();
          r2[j] = rng.uniform();
        }
        Point next = pso_move(p, gbest, r1, r2, config, problem.bounds);
        p.position = clamp_or_resample(std::move(next), problem.bounds, rng);
        p.eval = evaluate(problem, p.position, budget, rng);
        if (better(p.eval, p.best_eval)) {
          p.best_eval = p.eval;
          p.best_position = p.position;
        }
        track(p.position, p.eval);
      }
    } catch (const BudgetExhausted&) {
      done = true;
    }
    result.trace.rows.push_back(row(iter));
  }
  result.fes_used = budget.used();
  result.iterations = iter;
  return result;
}

}  // namespace eco
