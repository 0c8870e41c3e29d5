#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eco/rng.hpp"

namespace eco {

using Point = std::vector<double>;

/// Feasibility tolerance on the aggregate constraint violation.
inline constexpr double kFeasibilityTolerance = 1e-8;

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted() : std::runtime_error("function evaluation budget exhausted") {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got);
};

class UnknownFunction : public std::invalid_argument {
 public:
  explicit UnknownFunction(const std::string& id)
      : std::invalid_argument("unknown problem id: " + id) {}
};

/// Axis-aligned search box. Construction enforces lower[j] < upper[j].
class Bounds {
 public:
  Bounds(Point lower, Point upper);
  static Bounds uniform(std::size_t dim, double lower, double upper);

  std::size_t dim() const { return lower_.size(); }
  const Point& lower() const { return lower_; }
  const Point& upper() const { return upper_; }
  bool contains(std::span<const double> x) const;
  /// Smallest side length of the box.
  double min_width() const;

 private:
  Point lower_;
  Point upper_;
};

using Objective = std::function<double(std::span<const double>)>;
/// Inequality constraint, satisfied when the returned value is <= 0.
using Constraint = std::function<double(std::span<const double>)>;

struct Problem {
  std::string name;
  Bounds bounds;
  Objective objective;
  std::vector<Constraint> constraints;
  std::optional<double> known_optimum;
  /// Amplitude of an additive U[0,1) noise term drawn per evaluation. Zero for
  /// deterministic objectives.
  double noise_amplitude = 0.0;
  std::string description;

  std::size_t dim() const { return bounds.dim(); }
  bool noisy() const { return noise_amplitude != 0.0; }
};

struct Evaluation {
  double value = 0.0;
  double violation = 0.0;

  bool feasible() const { return violation <= kFeasibilityTolerance; }
};

/// Function-evaluation budget owned by a single run.
class EvalBudget {
 public:
  explicit EvalBudget(std::size_t max_fes);

  std::size_t max_fes() const { return max_fes_; }
  std::size_t used() const { return used_; }
  std::size_t remaining() const { return max_fes_ - used_; }
  bool exhausted() const { return used_ >= max_fes_; }

  /// Debits one evaluation; throws BudgetExhausted when none is left.
  void charge();

 private:
  std::size_t max_fes_;
  std::size_t used_ = 0;
};

/// Sum of max(0, g_i(x)) over the problem's constraints.
double total_violation(const Problem& problem, std::span<const double> x);

/// One function evaluation: objective (plus noise for noisy problems) and
/// aggregate violation. Exactly one unit of budget per call.
Evaluation evaluate(const Problem& problem, std::span<const double> x, EvalBudget& budget,
                    Rng& rng);

/// Evaluation without budget accounting or noise. Used for reporting.
Evaluation evaluate_unbudgeted(const Problem& problem, std::span<const double> x);

enum class Ordering { a_better, b_better, tie };

/// Feasibility rules: feasible beats infeasible, feasibles compare by value,
/// infeasibles by violation.
Ordering compare(const Evaluation& a, const Evaluation& b);

inline bool better(const Evaluation& a, const Evaluation& b) {
  return compare(a, b) == Ordering::a_better;
}

/// Uniform sample L + u .* (U - L) with an independent u per coordinate.
Point sample_uniform(const Bounds& bounds, Rng& rng);

/// Returns x unchanged when it lies in the box, otherwise a fresh uniform
/// sample of the box.
Point clamp_or_resample(Point x, const Bounds& bounds, Rng& rng);

}  // namespace eco
