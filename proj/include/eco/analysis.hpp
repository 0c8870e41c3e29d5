#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eco/problem.hpp"

namespace eco::analysis {

class EmptySample : public std::invalid_argument {
 public:
  EmptySample() : std::invalid_argument("summary of an empty sample") {}
};

class InsufficientGroups : public std::invalid_argument {
 public:
  InsufficientGroups() : std::invalid_argument("at least two algorithms are required") {}
};

inline constexpr double kDefaultAlpha = 0.05;

struct RunSummary {
  double min = 0.0;
  double ave = 0.0;
  double std = 0.0;  ///< sample standard deviation (N - 1); 0 for N = 1
  std::size_t n = 0;
};

RunSummary summarize(std::span<const double> values);

// ---------------------------------------------------------------------------
// Wilcoxon rank-sum

enum class Verdict { plus, equals, minus };

/// "+", "=" or "-".
const char* symbol(Verdict v);

struct PairwiseVerdict {
  double p_value = 1.0;
  Verdict verdict = Verdict::equals;
  double alpha = kDefaultAlpha;
};

/// Combined sample size up to which the exact null distribution is used.
inline constexpr std::size_t kExactRankSumLimit = 16;

/// Mid-ranks (1-based) of the pooled sample a ++ b.
std::vector<double> midranks(std::span<const double> pooled);

/// Two-sided exact p-value of the rank-sum of `a`, computed from the
/// permutation distribution of the pooled mid-ranks: 2 * min(lower, upper
/// tail), capped at 1.
double rank_sum_p_exact(std::span<const double> a, std::span<const double> b);

/// Two-sided normal approximation with tie and continuity correction.
double rank_sum_p_normal(std::span<const double> a, std::span<const double> b);

/// Exact for |a| + |b| <= 16, normal approximation beyond. "+" means `a` is
/// significantly better (smaller mean).
PairwiseVerdict wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                  double alpha = kDefaultAlpha);

struct WinTieLoss {
  std::size_t wins = 0;
  std::size_t ties = 0;
  std::size_t losses = 0;
};

/// reference[f] is the reference algorithm's sample on function f;
/// opponents[o][f] is opponent o's sample on the same function.
std::vector<WinTieLoss> win_tie_loss(const std::vector<std::vector<double>>& reference,
                                     const std::vector<std::vector<std::vector<double>>>& opponents,
                                     double alpha = kDefaultAlpha);

// ---------------------------------------------------------------------------
// Friedman

using Matrix = std::vector<std::vector<double>>;  ///< rows: functions, columns: algorithms

struct FriedmanTable {
  Matrix ave;
  Matrix min;  ///< optional tie-breaker, empty when absent
  Matrix std;  ///< optional tie-breaker, empty when absent
};

struct FriedmanResult {
  std::vector<double> mean_ranks;
  double statistic = 0.0;
  double p_value = 1.0;
  std::vector<std::size_t> global_rank;  ///< algorithm indices, best first
};

/// Per-function ranks of every algorithm (ascending Ave, then Min, then Std;
/// exact ties on every supplied key share the mid-rank).
Matrix friedman_ranks(const FriedmanTable& table);

FriedmanResult friedman(const FriedmanTable& table);
FriedmanResult friedman(const Matrix& ave);

// ---------------------------------------------------------------------------
// Exploration / exploitation

/// Mean over dimensions of the mean absolute deviation from the per-dimension
/// median.
double diversity(std::span<const Point> population);

struct DiversityCurve {
  std::vector<double> div;
  double div_max = 0.0;
  std::vector<double> exploration_pct;
  std::vector<double> exploitation_pct;
};

/// Curve from an already computed Div(k) series. When Div_max is zero every
/// iteration is reported as 0% exploration / 100% exploitation.
DiversityCurve exploration_curve(std::span<const double> div);

/// history[k] is the population at iteration k.
DiversityCurve diversity_curve(std::span<const std::vector<Point>> history);

}  // namespace eco::analysis
