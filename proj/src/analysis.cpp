#include "eco/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

namespace eco::analysis {

RunSummary summarize(std::span<const double> values) {
  if (values.empty()) throw EmptySample();
  RunSummary s;
  s.n = values.size();
  s.min = *std::min_element(values.begin(), values.end());
  s.ave = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.ave) * (v - s.ave);
    s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  // the mean of identical values can round away from them
  if (s.ave < s.min) s.ave = s.min;
  return s;
}

const char* symbol(Verdict v) {
  switch (v) {
    case Verdict::plus:
      return "+";
    case Verdict::minus:
      return "-";
    case Verdict::equals:
      break;
  }
  return "=";
}

std::vector<double> midranks(std::span<const double> pooled) {
  std::vector<std::size_t> order(pooled.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
  std::vector<double> ranks(pooled.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = r;
    i = j + 1;
  }
  return ranks;
}

namespace {

std::vector<double> pool(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

double mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

double rank_sum_p_exact(std::span<const double> a, std::span<const double> b) {
  const std::size_t n1 = a.size();
  const std::size_t n = n1 + b.size();
  const auto ranks = midranks(pool(a, b));

  // Mid-ranks are multiples of 1/2, so doubled ranks are integers and the
  // subset-sum distribution can be counted exactly.
  std::vector<long> twice(n);
  long total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    twice[i] = std::lround(2.0 * ranks[i]);
    total += twice[i];
  }
  long observed = 0;
  for (std::size_t i = 0; i < n1; ++i) observed += twice[i];

  // counts[size][sum]: number of subsets of the processed items with that
  // size and doubled rank sum
  std::vector<std::vector<double>> counts(n1 + 1, std::vector<double>(total + 1, 0.0));
  counts[0][0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t size = std::min(i + 1, n1); size >= 1; --size) {
      auto& dst = counts[size];
      const auto& src = counts[size - 1];
      for (long s = total; s >= twice[i]; --s) dst[s] += src[s - twice[i]];
    }
  }
  const auto& dist = counts[n1];
  double all = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  for (long s = 0; s <= total; ++s) {
    all += dist[s];
    if (s <= observed) lower += dist[s];
    if (s >= observed) upper += dist[s];
  }
  return std::min(1.0, 2.0 * std::min(lower, upper) / all);
}

double rank_sum_p_normal(std::span<const double> a, std::span<const double> b) {
  const auto n1 = static_cast<double>(a.size());
  const auto n2 = static_cast<double>(b.size());
  const double n = n1 + n2;
  const auto pooled = pool(a, b);
  const auto ranks = midranks(pooled);
  double w = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) w += ranks[i];

  // tie correction: sum over tie groups of t^3 - t
  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double ties = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const auto t = static_cast<double>(j - i);
    ties += t * t * t - t;
    i = j;
  }
  const double variance = n1 * n2 / 12.0 * ((n + 1.0) - ties / (n * (n - 1.0)));
  if (variance <= 0.0) return 1.0;
  const double expected = n1 * (n + 1.0) / 2.0;
  const double deviation = std::max(0.0, std::abs(w - expected) - 0.5);
  return std::min(1.0, 2.0 * normal_sf(deviation / std::sqrt(variance)));
}

PairwiseVerdict wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                  double alpha) {
  if (a.empty() || b.empty()) throw EmptySample();
  PairwiseVerdict out;
  out.alpha = alpha;
  out.p_value = a.size() + b.size() <= kExactRankSumLimit ? rank_sum_p_exact(a, b)
                                                          : rank_sum_p_normal(a, b);
  if (out.p_value < alpha) {
    const double ma = mean(a);
    const double mb = mean(b);
    if (ma < mb) {
      out.verdict = Verdict::plus;
    } else if (mb < ma) {
      out.verdict = Verdict::minus;
    }
  }
  return out;
}

std::vector<WinTieLoss> win_tie_loss(const std::vector<std::vector<double>>& reference,
                                     const std::vector<std::vector<std::vector<double>>>& opponents,
                                     double alpha) {
  std::vector<WinTieLoss> out(opponents.size());
  for (std::size_t o = 0; o < opponents.size(); ++o) {
    if (opponents[o].size() != reference.size()) {
      throw std::invalid_argument("opponent samples not aligned with reference functions");
    }
    for (std::size_t f = 0; f < reference.size(); ++f) {
      switch (wilcoxon_rank_sum(reference[f], opponents[o][f], alpha).verdict) {
        case Verdict::plus:
          ++out[o].wins;
          break;
        case Verdict::equals:
          ++out[o].ties;
          break;
        case Verdict::minus:
          ++out[o].losses;
          break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Matrix friedman_ranks(const FriedmanTable& table) {
  const auto& ave = table.ave;
  if (ave.empty()) throw std::invalid_argument("friedman: no functions");
  const std::size_t m = ave.front().size();
  if (m < 2) throw InsufficientGroups();
  const bool has_min = !table.min.empty();
  const bool has_std = !table.std.empty();

  Matrix ranks(ave.size(), std::vector<double>(m));
  for (std::size_t f = 0; f < ave.size(); ++f) {
    if (ave[f].size() != m) throw std::invalid_argument("friedman: ragged Ave matrix");
    auto key = [&](std::size_t j) {
      return std::array<double, 3>{ave[f][j], has_min ? table.min[f][j] : 0.0,
                                   has_std ? table.std[f][j] : 0.0};
    };
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    std::size_t i = 0;
    while (i < m) {
      std::size_t j = i;
      while (j + 1 < m && key(order[j + 1]) == key(order[i])) ++j;
      const double r = 0.5 * static_cast<double>(i + j) + 1.0;
      for (std::size_t t = i; t <= j; ++t) ranks[f][order[t]] = r;
      i = j + 1;
    }
  }
  return ranks;
}

FriedmanResult friedman(const FriedmanTable& table) {
  const Matrix ranks = friedman_ranks(table);
  const auto n = static_cast<double>(ranks.size());
  const std::size_t m = ranks.front().size();
  const auto md = static_cast<double>(m);

  FriedmanResult out;
  out.mean_ranks.assign(m, 0.0);
  for (const auto& row : ranks) {
    for (std::size_t j = 0; j < m; ++j) out.mean_ranks[j] += row[j];
  }
  for (auto& r : out.mean_ranks) r /= n;

  const double centre = (md + 1.0) / 2.0;
  double ss = 0.0;
  for (double r : out.mean_ranks) ss += (r - centre) * (r - centre);
  out.statistic = 12.0 * n / (md * (md + 1.0)) * ss;
  out.p_value = boost::math::gamma_q((md - 1.0) / 2.0, out.statistic / 2.0);

  out.global_rank.resize(m);
  std::iota(out.global_rank.begin(), out.global_rank.end(), 0);
  std::stable_sort(out.global_rank.begin(), out.global_rank.end(), [&](std::size_t a, std::size_t b) {
    return out.mean_ranks[a] < out.mean_ranks[b];
  });
  return out;
}

FriedmanResult friedman(const Matrix& ave) { return friedman(FriedmanTable{ave, {}, {}}); }

// ---------------------------------------------------------------------------

double diversity(std::span<const Point> population) {
  if (population.empty()) throw EmptySample();
  const std::size_t p = population.size();
  const std::size_t dim = population.front().size();
  std::vector<double> column(p);
  double total = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < p; ++i) column[i] = population[i][j];
    std::vector<double> sorted = column;
    std::sort(sorted.begin(), sorted.end());
    const double median =
        p % 2 == 1 ? sorted[p / 2] : 0.5 * (sorted[p / 2 - 1] + sorted[p / 2]);
    double dev = 0.0;
    for (double x : column) dev += std::abs(median - x);
    total += dev / static_cast<double>(p);
  }
  return total / static_cast<double>(dim);
}

DiversityCurve exploration_curve(std::span<const double> div) {
  DiversityCurve c;
  c.div.assign(div.begin(), div.end());
  c.div_max = div.empty() ? 0.0 : *std::max_element(div.begin(), div.end());
  c.exploration_pct.resize(div.size());
  c.exploitation_pct.resize(div.size());
  for (std::size_t k = 0; k < div.size(); ++k) {
    if (c.div_max > 0.0) {
      c.exploration_pct[k] = 100.0 * div[k] / c.div_max;
      c.exploitation_pct[k] = 100.0 - c.exploration_pct[k];
    } else {
      c.exploration_pct[k] = 0.0;
      c.exploitation_pct[k] = 100.0;
    }
  }
  return c;
}

DiversityCurve diversity_curve(std::span<const std::vector<Point>> history) {
  std::vector<double> div;
  div.reserve(history.size());
  for (const auto& population : history) div.push_back(diversity(population));
  return exploration_curve(div);
}

}  // namespace eco::analysis
