#include "eco/ecosystem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "eco/analysis.hpp"

namespace eco {

namespace {

constexpr double kShiftSpread = 0.1;
constexpr double kShiftFloor = 1e-12;

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

RoleCounts role_counts(const EcoConfig& config) {
  const auto& p = config.proportions;
  const double parts[] = {p.producers, p.herbivores, p.carnivores, p.omnivores};
  double sum = 0.0;
  for (double x : parts) {
    if (!(x >= 0.0)) throw std::invalid_argument("role proportions must be nonnegative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("role proportions must sum to 1");
  if (config.pop_size < 4) throw std::invalid_argument("pop_size must be at least 4");

  const auto n = static_cast<long>(config.pop_size);
  long c[4];
  c[0] = std::lround(p.producers * n);
  c[1] = std::lround(p.herbivores * n);
  c[2] = std::lround(p.carnivores * n);
  c[3] = n - c[0] - c[1] - c[2];
  for (;;) {
    auto low = std::min_element(std::begin(c), std::end(c));
    if (*low >= 1) break;
    auto high = std::max_element(std::begin(c), std::end(c));
    --*high;
    ++*low;
  }
  return {static_cast<std::size_t>(c[0]), static_cast<std::size_t>(c[1]),
          static_cast<std::size_t>(c[2]), static_cast<std::size_t>(c[3])};
}

std::size_t iteration_limit(const EcoConfig& config) {
  const auto counts = role_counts(config);
  if (config.max_fes <= config.pop_size) return 1;
  return std::max<std::size_t>(1, (config.max_fes - config.pop_size) / counts.fes_per_iteration());
}

Individual Individual::from(Point position, Evaluation eval) {
  Individual ind;
  ind.best_position = position;
  ind.best_eval = eval;
  ind.position = std::move(position);
  ind.eval = eval;
  return ind;
}

std::vector<const Individual*> EcoState::members() const {
  std::vector<const Individual*> out;
  out.reserve(size());
  for (const auto* group : {&producers, &herbivores, &carnivores, &omnivores}) {
    for (const auto& ind : *group) out.push_back(&ind);
  }
  return out;
}

// ---------------------------------------------------------------------------

double predation_factor_component(double u, int sign, std::size_t k, std::size_t k_max) {
  const double t = static_cast<double>(k) / static_cast<double>(k_max);
  return 1.0 + 2.0 * u * std::exp(-9.0 * t * t * t) * static_cast<double>(sign);
}

Point predation_factor(std::size_t k, std::size_t k_max, std::size_t dim, Rng& rng) {
  Point g(dim);
  for (auto& gj : g) {
    const double u = rng.uniform();
    // (-1)^randi([1,2])
    const int sign = rng.integer(1, 2) == 1 ? -1 : 1;
    gj = predation_factor_component(u, sign, k, k_max);
  }
  return g;
}

// ---------------------------------------------------------------------------

std::vector<double> shifted_fitness(std::span<const double> values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double spread = *hi - *lo;
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = values[i] - *lo + kShiftSpread * spread + kShiftFloor;
  }
  return out;
}

std::vector<double> reciprocal_probabilities(std::span<const double> positive_fitness) {
  std::vector<double> p(positive_fitness.size());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = 1.0 / positive_fitness[i];
    total += p[i];
  }
  for (auto& x : p) x /= total;
  return p;
}

std::vector<double> selection_probabilities(std::span<const Evaluation> pool) {
  if (pool.empty()) throw std::invalid_argument("roulette pool is empty");
  const bool all_feasible =
      std::all_of(pool.begin(), pool.end(), [](const Evaluation& e) { return e.feasible(); });
  std::vector<double> fitness(pool.size());
  if (all_feasible) {
    std::vector<double> values(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) values[i] = pool[i].value;
    const bool finite = std::all_of(values.begin(), values.end(),
                                    [](double v) { return std::isfinite(v); });
    if (finite) return reciprocal_probabilities(shifted_fitness(values));
  }
  // rank-reciprocal weights under compare
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return better(pool[a], pool[b]); });
  std::size_t rank = 1;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (pos > 0 && better(pool[order[pos - 1]], pool[order[pos]])) rank = pos + 1;
    fitness[order[pos]] = static_cast<double>(rank);
  }
  return reciprocal_probabilities(fitness);
}

std::size_t roulette_pick(std::span<const double> probabilities, double u) {
  double q = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    q += probabilities[i];
    if (u <= q) return i;
  }
  return probabilities.size() - 1;
}

std::vector<std::size_t> roulette_select(std::span<const Evaluation> pool, std::size_t draws,
                                         Rng& rng) {
  const auto p = selection_probabilities(pool);
  std::vector<std::size_t> picks(draws);
  for (auto& idx : picks) idx = roulette_pick(p, rng.uniform());
  return picks;
}

// ---------------------------------------------------------------------------

Point predation_move(std::span<const double> self, std::span<const std::span<const double>> prey,
                     std::span<const double> weights, std::span<const double> factor) {
  if (prey.size() != weights.size()) throw std::invalid_argument("one weight per prey required");
  const std::size_t dim = self.size();
  if (factor.size() != dim) throw DimensionMismatch(dim, factor.size());
  Point out(self.begin(), self.end());
  for (std::size_t j = 0; j < dim; ++j) {
    double pull = 0.0;
    for (std::size_t t = 0; t < prey.size(); ++t) pull += weights[t] * (prey[t][j] - self[j]);
    out[j] += factor[j] * pull;
  }
  return out;
}

std::vector<Individual> absorb_nutrients(std::span<const Individual> producers,
                                         std::span<const Scored> decomposers) {
  std::vector<Scored> nutrients;
  nutrients.reserve(producers.size() + decomposers.size());
  for (const auto& p : producers) nutrients.push_back({p.position, p.eval});
  nutrients.insert(nutrients.end(), decomposers.begin(), decomposers.end());
  std::stable_sort(nutrients.begin(), nutrients.end(),
                   [](const Scored& a, const Scored& b) { return better(a.eval, b.eval); });
  std::vector<Individual> out;
  out.reserve(producers.size());
  for (std::size_t i = 0; i < producers.size(); ++i) {
    out.push_back(Individual::from(std::move(nutrients[i].position), nutrients[i].eval));
  }
  return out;
}

Point decompose_optimal(std::span<const double> self, std::span<const double> iter_best,
                        std::span<const double> neighbor_rands, double offset_rand) {
  const std::size_t dim = self.size();
  const double offset = 0.4 * offset_rand - 0.2;
  Point out(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const double nei = neighbor_rands[j] * iter_best[j];
    out[j] = nei + offset * (nei - self[j]);
  }
  return out;
}

Point decompose_optimal(std::span<const double> self, std::span<const double> iter_best, Rng& rng) {
  Point r(self.size());
  for (auto& x : r) x = rng.uniform();
  const double offset_rand = rng.uniform();
  return decompose_optimal(self, iter_best, r, offset_rand);
}

Point decompose_local(std::span<const double> self, std::span<const double> iter_best,
                      std::span<const double> direction, double radius_rand) {
  const std::size_t dim = self.size();
  Point gap(dim);
  for (std::size_t j = 0; j < dim; ++j) gap[j] = iter_best[j] - self[j];
  const double radius = radius_rand * norm(gap);
  const double vnorm = norm(direction);
  Point out(self.begin(), self.end());
  if (radius == 0.0) return out;
  for (std::size_t j = 0; j < dim; ++j) out[j] += radius * direction[j] / vnorm;
  return out;
}

Point decompose_local(std::span<const double> self, std::span<const double> iter_best, Rng& rng) {
  Point v(self.size());
  do {
    for (auto& x : v) x = 2.0 * rng.uniform() - 1.0;
  } while (norm(v) == 0.0);
  const double radius_rand = rng.uniform();
  return decompose_local(self, iter_best, v, radius_rand);
}

double walk_coefficient(std::size_t k, std::size_t k_max, double u) {
  const double t = static_cast<double>(k) / static_cast<double>(k_max);
  return std::cos(u * std::numbers::pi) * std::pow(1.0 - t / 1.5, 5.0 * t);
}

Point decompose_global(std::span<const double> self, double walk_coeff,
                       std::span<const double> step_rands, double scale, double rand_wei) {
  Point out(self.size());
  for (std::size_t j = 0; j < self.size(); ++j) {
    const double step = (2.0 / 3.0) * step_rands[j] * walk_coeff * scale;
    out[j] = rand_wei * self[j] + (1.0 - rand_wei) * step;
  }
  return out;
}

Point decompose_global(std::span<const double> self, std::size_t k, std::size_t k_max,
                       const Bounds& bounds, Rng& rng) {
  const double h = walk_coefficient(k, k_max, rng.uniform());
  Point r(self.size());
  for (auto& x : r) x = rng.uniform();
  const double rand_wei = rng.uniform();
  return decompose_global(self, h, r, bounds.min_width(), rand_wei);
}

bool greedy_accept(Individual& individual, const Point& candidate, const Evaluation& eval) {
  const bool accepted = better(eval, individual.eval);
  if (accepted) {
    individual.position = candidate;
    individual.eval = eval;
  }
  if (better(eval, individual.best_eval)) {
    individual.best_position = candidate;
    individual.best_eval = eval;
  }
  return accepted;
}

// ---------------------------------------------------------------------------

Ecosystem::Ecosystem(const Problem& problem, EcoConfig config)
    : problem_(problem),
      config_(config),
      counts_(role_counts(config)),
      budget_(config.max_fes),
      rng_(config.seed) {
  state_.k_max = iteration_limit(config_);
}

Evaluation Ecosystem::evaluate_point(const Point& x) {
  const Evaluation e = evaluate(problem_, x, budget_, rng_);
  if (better(e, state_.global_best.eval)) state_.global_best = {x, e};
  return e;
}

void Ecosystem::init() {
  if (budget_.max_fes() < config_.pop_size) throw BudgetExhausted();
  state_.global_best = {Point(problem_.dim(), 0.0),
                        {std::numeric_limits<double>::infinity(),
                         std::numeric_limits<double>::infinity()}};
  auto fill = [&](std::vector<Individual>& group, std::size_t n) {
    group.clear();
    group.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Point x = sample_uniform(problem_.bounds, rng_);
      const Evaluation e = evaluate_point(x);
      group.push_back(Individual::from(std::move(x), e));
    }
  };
  fill(state_.producers, counts_.producers);
  fill(state_.herbivores, counts_.herbivores);
  fill(state_.carnivores, counts_.carnivores);
  fill(state_.omnivores, counts_.omnivores);
  state_.decomposers.clear();
  state_.k = 0;
}

void Ecosystem::producer_update() {
  if (state_.decomposers.empty()) return;
  state_.producers = absorb_nutrients(state_.producers, state_.decomposers);
}

void Ecosystem::consumer_sweep(
    std::vector<Individual>& guild,
    const std::vector<std::pair<const std::vector<Individual>*, std::size_t>>& diet,
    std::span<const double> factor) {
  // Selection probabilities are fixed for the sweep: prey pools belong to
  // other guilds and do not change while this guild moves.
  std::vector<std::vector<double>> probs;
  for (const auto& [pool, draws] : diet) {
    std::vector<Evaluation> evals;
    evals.reserve(pool->size());
    for (const auto& ind : *pool) evals.push_back(ind.eval);
    probs.push_back(selection_probabilities(evals));
  }

  std::vector<std::span<const double>> prey;
  std::vector<double> weights;
  for (auto& self : guild) {
    prey.clear();
    for (std::size_t d = 0; d < diet.size(); ++d) {
      for (std::size_t t = 0; t < diet[d].second; ++t) {
        prey.emplace_back((*diet[d].first)[roulette_pick(probs[d], rng_.uniform())].position);
      }
    }
    weights.resize(prey.size());
    for (auto& w : weights) w = rng_.uniform();
    Point candidate = predation_move(self.position, prey, weights, factor);
    candidate = clamp_or_resample(std::move(candidate), problem_.bounds, rng_);
    const Evaluation e = evaluate_point(candidate);
    greedy_accept(self, candidate, e);
  }
}

void Ecosystem::herbivore_sweep(std::span<const double> factor) {
  consumer_sweep(state_.herbivores, {{&state_.producers, 3}}, factor);
}

void Ecosystem::carnivore_sweep(std::span<const double> factor) {
  consumer_sweep(state_.carnivores, {{&state_.herbivores, 3}}, factor);
}

void Ecosystem::omnivore_sweep(std::span<const double> factor) {
  consumer_sweep(state_.omnivores,
                 {{&state_.producers, 1}, {&state_.herbivores, 1}, {&state_.carnivores, 2}},
                 factor);
}

void Ecosystem::decompose_sweep() {
  const auto members = state_.members();
  const Individual* best = members.front();
  for (const auto* ind : members) {
    if (better(ind->eval, best->eval)) best = ind;
  }
  state_.iter_best = {best->position, best->eval};

  state_.decomposers.clear();
  state_.decomposers.reserve(members.size());
  const Point& x_best = state_.iter_best.position;
  for (const auto* ind : members) {
    Point dec;
    if (rng_.uniform() < 0.5) {
      dec = decompose_optimal(ind->position, x_best, rng_);
    } else if (rng_.uniform() < 0.5) {
      dec = decompose_local(ind->position, x_best, rng_);
    } else {
      dec = decompose_global(ind->position, state_.k, state_.k_max, problem_.bounds, rng_);
    }
    dec = clamp_or_resample(std::move(dec), problem_.bounds, rng_);
    const Evaluation e = evaluate_point(dec);
    state_.decomposers.push_back({std::move(dec), e});
  }
}

void Ecosystem::step() {
  ++state_.k;
  if (state_.k != 1) producer_update();
  const Point factor = predation_factor(state_.k, state_.k_max, problem_.dim(), rng_);
  herbivore_sweep(factor);
  carnivore_sweep(factor);
  omnivore_sweep(factor);
  decompose_sweep();
}

TraceRow Ecosystem::trace_row() const {
  std::vector<Point> population;
  population.reserve(state_.size());
  for (const auto* ind : state_.members()) population.push_back(ind->position);
  return {state_.k, budget_.used(), state_.global_best.eval.value,
          state_.global_best.eval.violation, analysis::diversity(population)};
}

RunResult Ecosystem::run() {
  init();
  RunResult result;
  result.trace.rows.push_back(trace_row());
  while (state_.k < state_.k_max) {
    bool truncated = false;
    try {
      step();
    } catch (const BudgetExhausted&) {
      truncated = true;
    }
    result.trace.rows.push_back(trace_row());
    if (truncated) break;
  }
  result.best_position = state_.global_best.position;
  result.best = state_.global_best.eval;
  result.fes_used = budget_.used();
  result.iterations = state_.k;
  return result;
}

RunResult run_eco(const Problem& problem, const EcoConfig& config) {
  Ecosystem eco(problem, config);
  return eco.run();
}

}  // namespace eco
