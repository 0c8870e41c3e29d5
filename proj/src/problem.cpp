#include "eco/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eco {

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t got)
    : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                            ", got " + std::to_string(got)) {}

Bounds::Bounds(Point lower, Point upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) throw std::invalid_argument("bounds must have dimension >= 1");
  if (lower_.size() != upper_.size()) throw DimensionMismatch(lower_.size(), upper_.size());
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (!(lower_[j] < upper_[j])) {
      throw std::invalid_argument("bounds: lower[" + std::to_string(j) +
                                  "] must be < upper[" + std::to_string(j) + "]");
    }
  }
}

Bounds Bounds::uniform(std::size_t dim, double lower, double upper) {
  return Bounds(Point(dim, lower), Point(dim, upper));
}

bool Bounds::contains(std::span<const double> x) const {
  if (x.size() != dim()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(x[j] >= lower_[j] && x[j] <= upper_[j])) return false;
  }
  return true;
}

double Bounds::min_width() const {
  double w = upper_[0] - lower_[0];
  for (std::size_t j = 1; j < dim(); ++j) w = std::min(w, upper_[j] - lower_[j]);
  return w;
}

EvalBudget::EvalBudget(std::size_t max_fes) : max_fes_(max_fes) {
  if (max_fes == 0) throw std::invalid_argument("max_fes must be positive");
}

void EvalBudget::charge() {
  if (exhausted()) throw BudgetExhausted();
  ++used_;
}

double total_violation(const Problem& problem, std::span<const double> x) {
  double v = 0.0;
  for (const auto& g : problem.constraints) {
    const double gi = g(x);
    // an undefined constraint value counts as infinitely violated
    v += std::isnan(gi) ? std::numeric_limits<double>::infinity() : std::max(0.0, gi);
  }
  return v;
}

Evaluation evaluate(const Problem& problem, std::span<const double> x, EvalBudget& budget,
                    Rng& rng) {
  if (x.size() != problem.dim()) throw DimensionMismatch(problem.dim(), x.size());
  budget.charge();
  Evaluation e = evaluate_unbudgeted(problem, x);
  if (problem.noisy()) e.value += problem.noise_amplitude * rng.uniform();
  return e;
}

Evaluation evaluate_unbudgeted(const Problem& problem, std::span<const double> x) {
  if (x.size() != problem.dim()) throw DimensionMismatch(problem.dim(), x.size());
  double value = problem.objective(x);
  if (std::isnan(value)) value = std::numeric_limits<double>::infinity();
  return {value, total_violation(problem, x)};
}

Ordering compare(const Evaluation& a, const Evaluation& b) {
  const bool fa = a.feasible();
  const bool fb = b.feasible();
  if (fa != fb) return fa ? Ordering::a_better : Ordering::b_better;
  const double ka = fa ? a.value : a.violation;
  const double kb = fa ? b.value : b.violation;
  if (ka < kb) return Ordering::a_better;
  if (kb < ka) return Ordering::b_better;
  return Ordering::tie;
}

Point sample_uniform(const Bounds& bounds, Rng& rng) {
  Point x(bounds.dim());
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = bounds.lower()[j] + rng.uniform() * (bounds.upper()[j] - bounds.lower()[j]);
  }
  return x;
}

Point clamp_or_resample(Point x, const Bounds& bounds, Rng& rng) {
  if (x.size() != bounds.dim()) throw DimensionMismatch(bounds.dim(), x.size());
  if (bounds.contains(x)) return x;
  return sample_uniform(bounds, rng);
}

}  // namespace eco
