#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <memory>

#include "eco/ecosystem.hpp"

using namespace eco;

namespace {

Problem sphere(std::size_t dim, double lo = -10, double hi = 10) {
  return Problem{"sphere", Bounds::uniform(dim, lo, hi),
                 [](std::span<const double> x) {
                   double s = 0.0;
                   for (double v : x) s += v * v;
                   return s;
                 },
                 {}, 0.0, 0.0, ""};
}

bool leq(const Evaluation& a, const Evaluation& b) { return compare(a, b) != Ordering::b_better; }

Individual with_value(double v) { return Individual::from(Point{v}, Evaluation{v, 0.0}); }

}  // namespace

TEST_CASE("role counts") {
  EcoConfig c;
  const auto n = role_counts(c);
  CHECK(n.producers == 6);
  CHECK(n.herbivores == 9);
  CHECK(n.carnivores == 9);
  CHECK(n.omnivores == 6);
  CHECK(n.fes_per_iteration() == 54);
  c.pop_size = 10;
  const auto m = role_counts(c);
  CHECK(m.producers == 2);
  CHECK(m.herbivores == 3);
  CHECK(m.carnivores == 3);
  CHECK(m.omnivores == 2);
  c.pop_size = 4;
  const auto s = role_counts(c);
  CHECK(s.total() == 4);
  CHECK(std::min({s.producers, s.herbivores, s.carnivores, s.omnivores}) >= 1);
  c.pop_size = 3;
  CHECK_THROWS_AS(role_counts(c), std::invalid_argument);
  c.pop_size = 30;
  c.proportions.producers = 0.5;
  CHECK_THROWS_AS(role_counts(c), std::invalid_argument);
}

TEST_CASE("iteration limit follows the budget") {
  EcoConfig c;
  c.max_fes = 300000;
  CHECK(iteration_limit(c) == (300000 - 30) / 54);
  c.max_fes = 40;
  CHECK(iteration_limit(c) == 1);
}

TEST_CASE("predation factor components") {
  CHECK(predation_factor_component(1.0, 1, 0, 10) == doctest::Approx(3.0));
  CHECK(predation_factor_component(1.0, -1, 0, 10) == doctest::Approx(-1.0));
  CHECK(predation_factor_component(0.0, -1, 5, 10) == 1.0);
  // late iterations squeeze the range toward 1
  CHECK(std::abs(predation_factor_component(1.0, 1, 10, 10) - 1.0) <= 2.0 * std::exp(-9.0) + 1e-15);
}

TEST_CASE("predation factor stays in [-1, 3] over 10^6 samples") {
  Rng rng(11);
  double lo = 10.0, hi = -10.0;
  std::size_t drawn = 0;
  for (std::size_t k = 1; drawn < 1000000; k = k % 100 + 1) {
    for (double g : predation_factor(k, 100, 50, rng)) {
      lo = std::min(lo, g);
      hi = std::max(hi, g);
      ++drawn;
    }
  }
  CHECK(lo >= -1.0);
  CHECK(hi <= 3.0);
  CHECK(lo < -0.9);
  CHECK(hi > 2.9);
}

TEST_CASE("roulette probabilities") {
  const std::vector<double> f{1.0, 2.0, 4.0};
  const auto p = reciprocal_probabilities(f);
  CHECK(p[0] == doctest::Approx(4.0 / 7.0));
  CHECK(p[1] == doctest::Approx(2.0 / 7.0));
  CHECK(p[2] == doctest::Approx(1.0 / 7.0));

  const auto s = shifted_fitness(std::vector<double>{-10.0, 0.0, 10.0});
  CHECK(s[0] == doctest::Approx(2.0));
  CHECK(s[1] == doctest::Approx(12.0));
  CHECK(s[2] == doctest::Approx(22.0));
  const auto equal = selection_probabilities(std::vector<Evaluation>(4, Evaluation{3.0, 0.0}));
  for (double x : equal) CHECK(x == doctest::Approx(0.25));
}

TEST_CASE("roulette probabilities are normalized and order preserving") {
  Rng rng(8);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.integer(0, 11));
    std::vector<Evaluation> pool(n);
    for (auto& e : pool) {
      e.value = rng.uniform(-1e4, 1e4) * std::pow(10.0, static_cast<double>(rng.integer(-6, 6)));
      e.violation = rng.uniform() < 0.2 ? rng.uniform() : 0.0;
    }
    const auto p = selection_probabilities(pool);
    double total = 0.0;
    for (double x : p) {
      CHECK(x > 0.0);
      total += x;
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (better(pool[a], pool[b])) CHECK(p[a] >= p[b]);
      }
    }
  }
}

TEST_CASE("roulette scan and sampling frequencies") {
  const std::vector<double> p{4.0 / 7.0, 2.0 / 7.0, 1.0 / 7.0};
  CHECK(roulette_pick(p, 0.0) == 0);
  CHECK(roulette_pick(p, 4.0 / 7.0) == 0);
  CHECK(roulette_pick(p, 0.6) == 1);
  CHECK(roulette_pick(p, 1.0) == 2);

  Rng rng(123);
  const int n = 200000;
  int counts[3] = {};
  for (int i = 0; i < n; ++i) ++counts[roulette_pick(p, rng.uniform())];
  for (int i = 0; i < 3; ++i) {
    const double sd = std::sqrt(p[static_cast<std::size_t>(i)] * (1 - p[static_cast<std::size_t>(i)]) / n);
    CHECK(std::abs(counts[i] / static_cast<double>(n) - p[static_cast<std::size_t>(i)]) < 5 * sd);
  }
}

TEST_CASE("infeasible pools fall back to rank weights") {
  const std::vector<Evaluation> pool{{0.0, 2.0}, {5.0, 0.0}, {1.0, 1.0}};
  const auto p = selection_probabilities(pool);
  // ranks 3, 1, 2 -> weights 1/3, 1, 1/2
  CHECK(p[1] == doctest::Approx(6.0 / 11.0));
  CHECK(p[2] == doctest::Approx(3.0 / 11.0));
  CHECK(p[0] == doctest::Approx(2.0 / 11.0));
}

TEST_CASE("producer update keeps the best of producers and decomposers") {
  const std::vector<Individual> producers{with_value(5), with_value(9)};
  const std::vector<Scored> dec{{Point{1}, {1, 0}}, {Point{7}, {7, 0}}, {Point{20}, {20, 0}},
                                {Point{30}, {30, 0}}};
  const auto out = absorb_nutrients(producers, dec);
  REQUIRE(out.size() == 2);
  CHECK(out[0].eval.value == 1.0);
  CHECK(out[1].eval.value == 5.0);
  CHECK(out[0].position == Point{1});
}

TEST_CASE("producer update is stable on ties") {
  const std::vector<Individual> producers{Individual::from(Point{0.0}, {2, 0})};
  const std::vector<Scored> dec{{Point{1.0}, {2, 0}}};
  CHECK(absorb_nutrients(producers, dec)[0].position == Point{0.0});
}

TEST_CASE("predation moves by hand") {
  const std::vector<double> g{1.0};
  const std::vector<double> ones3{1, 1, 1};

  const Point p1{1}, p2{2}, p3{3};
  std::vector<std::span<const double>> herb_prey{p1, p2, p3};
  CHECK(predation_move(Point{0}, herb_prey, ones3, g)[0] == doctest::Approx(6.0));

  const Point zero{0};
  std::vector<std::span<const double>> car_prey{zero, zero, zero};
  CHECK(predation_move(Point{10}, car_prey, ones3, g)[0] == doctest::Approx(-20.0));

  const Point one{1};
  std::vector<std::span<const double>> omn_prey{one, one, one, one};
  CHECK(predation_move(Point{0}, omn_prey, std::vector<double>{1, 1, 1, 1}, g)[0] ==
        doctest::Approx(4.0));
}

TEST_CASE("decomposition operators by hand") {
  CHECK(decompose_optimal(Point{3}, Point{10}, Point{0.5}, 1.0)[0] == doctest::Approx(5.4));
  // rand = 1 everywhere: neighborhood is the iteration best, offset +0.2
  const auto d = decompose_optimal(Point{1, 2}, Point{4, 4}, Point{1, 1}, 1.0);
  CHECK(d[0] == doctest::Approx(4.0 + 0.2 * 3.0));
  CHECK(d[1] == doctest::Approx(4.0 + 0.2 * 2.0));
  // zero best: result = offset * (-x)
  CHECK(decompose_optimal(Point{5}, Point{0}, Point{0.3}, 0.0)[0] == doctest::Approx(1.0));

  CHECK(decompose_local(Point{1, 1}, Point{1, 1}, Point{0.3, -0.2}, 0.7) == Point{1, 1});
  const auto l = decompose_local(Point{0, 0}, Point{3, 4}, Point{1, 0}, 0.5);
  CHECK(l[0] == doctest::Approx(2.5));
  CHECK(l[1] == doctest::Approx(0.0));

  CHECK(decompose_global(Point{2, -3}, 0.9, Point{0.5, 0.5}, 10.0, 1.0) == Point{2, -3});
  const auto w = decompose_global(Point{2}, 1.0, Point{0.75}, 6.0, 0.5);
  CHECK(w[0] == doctest::Approx(0.5 * 2 + 0.5 * (2.0 / 3.0) * 0.75 * 6.0));
}

TEST_CASE("optimal decomposition offset stays within 0.2 of the neighborhood distance") {
  Rng rng(4);
  for (int i = 0; i < 10000; ++i) {
    const Point x{rng.uniform(-5, 5)};
    const Point best{rng.uniform(-5, 5)};
    const Point r{rng.uniform()};
    const double u = rng.uniform();
    const double nei = r[0] * best[0];
    const double out = decompose_optimal(x, best, r, u)[0];
    CHECK(std::abs(out - nei) <= 0.2 * std::abs(nei - x[0]) + 1e-12);
  }
}

TEST_CASE("walk coefficient") {
  for (double u : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    for (std::size_t k = 1; k <= 100; ++k) CHECK(std::abs(walk_coefficient(k, 100, u)) <= 1.0);
    CHECK(std::abs(walk_coefficient(100, 100, u)) <= std::pow(1.0 / 3.0, 5) + 1e-15);
  }
  CHECK(walk_coefficient(100, 100, 0.0) == doctest::Approx(std::pow(1.0 / 3.0, 5)));
}

TEST_CASE("local decomposition radius is uniform on [0, R]") {
  Rng rng(99);
  const Point self{1.0, -2.0};
  const Point best{4.0, 2.0};  // R = 5
  const int n = 100000;
  std::vector<double> radii(n);
  for (auto& r : radii) {
    const auto d = decompose_local(self, best, rng);
    r = std::hypot(d[0] - self[0], d[1] - self[1]) / 5.0;
    REQUIRE(r <= 1.0 + 1e-12);
  }
  std::sort(radii.begin(), radii.end());
  double ks = 0.0;
  for (int i = 0; i < n; ++i) {
    ks = std::max(ks, std::max(std::abs((i + 1.0) / n - radii[static_cast<std::size_t>(i)]),
                               std::abs(radii[static_cast<std::size_t>(i)] - static_cast<double>(i) / n)));
  }
  // 1% critical value 1.63 / sqrt(n)
  CHECK(ks < 1.63 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("greedy acceptance") {
  auto ind = Individual::from(Point{0.0}, {2.0, 0.0});
  CHECK(greedy_accept(ind, Point{1.0}, {1.0, 0.0}));
  CHECK(ind.eval.value == 1.0);
  CHECK(ind.best_eval.value == 1.0);
  CHECK_FALSE(greedy_accept(ind, Point{2.0}, {3.0, 0.0}));
  CHECK(ind.position == Point{1.0});
  CHECK(ind.best_eval.value == 1.0);
  CHECK_FALSE(greedy_accept(ind, Point{5.0}, {1.0, 0.0}));
  CHECK(ind.position == Point{1.0});
}

TEST_CASE("runs are deterministic per seed") {
  const auto p = sphere(5);
  EcoConfig c;
  c.max_fes = 5000;
  c.seed = 17;
  const auto a = run_eco(p, c);
  const auto b = run_eco(p, c);
  CHECK(a.best.value == b.best.value);
  CHECK(a.best_position == b.best_position);
  REQUIRE(a.trace.rows.size() == b.trace.rows.size());
  for (std::size_t i = 0; i < a.trace.rows.size(); ++i) {
    CHECK(a.trace.rows[i].best_value == b.trace.rows[i].best_value);
    CHECK(a.trace.rows[i].div == b.trace.rows[i].div);
  }
  c.seed = 18;
  CHECK(run_eco(p, c).best.value != a.best.value);
}

TEST_CASE("FE accounting, containment and trace shape") {
  for (std::size_t max_fes : {30u, 31u, 84u, 100u, 1000u, 5401u}) {
    auto counter = std::make_shared<std::size_t>(0);
    auto escaped = std::make_shared<std::size_t>(0);
    const Bounds box = Bounds::uniform(3, -2, 3);
    Problem p{"counted", box,
              [counter, escaped, box](std::span<const double> x) {
                ++*counter;
                if (!box.contains(x)) ++*escaped;
                return std::abs(x[0] - 1) + x[1] * x[1] + std::cos(x[2]);
              },
              {}, std::nullopt, 0.0, ""};
    EcoConfig c;
    c.max_fes = max_fes;
    c.seed = max_fes;
    const auto r = run_eco(p, c);
    CHECK(*counter == r.fes_used);
    CHECK(r.fes_used <= max_fes);
    CHECK(*escaped == 0);
    CHECK(r.trace.rows.size() == r.iterations + 1);
    for (std::size_t i = 1; i < r.trace.rows.size(); ++i) {
      CHECK(r.trace.rows[i].best_value <= r.trace.rows[i - 1].best_value);
      CHECK(r.trace.rows[i].fes >= r.trace.rows[i - 1].fes);
    }
    CHECK(r.trace.rows.back().fes == r.fes_used);
    CHECK(box.contains(r.best_position));
    CHECK(p.objective(r.best_position) == r.best.value);
  }
}

TEST_CASE("budget below the population size is rejected") {
  EcoConfig c;
  c.max_fes = 29;
  CHECK_THROWS_AS(run_eco(sphere(2), c), BudgetExhausted);
}

TEST_CASE("personal bests dominate current positions every iteration") {
  const auto p = sphere(4);
  EcoConfig c;
  c.max_fes = 3000;
  c.seed = 3;
  Ecosystem eco(p, c);
  eco.init();
  Evaluation previous_best = eco.state().global_best.eval;
  for (int k = 0; k < 40; ++k) {
    eco.step();
    for (const auto* ind : eco.state().members()) {
      CHECK(leq(ind->best_eval, ind->eval));
      CHECK(p.bounds.contains(ind->position));
    }
    for (const auto& d : eco.state().decomposers) {
      CHECK(leq(eco.state().global_best.eval, d.eval));
      CHECK(p.bounds.contains(d.position));
    }
    CHECK(leq(eco.state().global_best.eval, previous_best));
    CHECK(leq(eco.state().global_best.eval, eco.state().iter_best.eval));
    previous_best = eco.state().global_best.eval;
  }
}

TEST_CASE("greedy acceptance never loses ground on a 1-D quadratic") {
  const auto p = sphere(1, -5, 5);
  EcoConfig c;
  c.pop_size = 10;
  c.seed = 21;
  const auto counts = role_counts(c);
  c.max_fes = c.pop_size + 50 * counts.fes_per_iteration();
  Ecosystem eco(p, c);
  eco.init();
  Evaluation initial_best = eco.state().producers.front().eval;
  for (const auto* ind : eco.state().members()) {
    if (better(ind->eval, initial_best)) initial_best = ind->eval;
  }
  const auto r = run_eco(p, c);
  CHECK(r.iterations == 50);
  CHECK(leq(r.best, initial_best));
}

TEST_CASE("constant objective gives a flat trace") {
  Problem p{"flat", Bounds::uniform(3, -1, 1), [](std::span<const double>) { return 7.0; }, {},
            7.0, 0.0, ""};
  EcoConfig c;
  c.max_fes = 2000;
  const auto r = run_eco(p, c);
  for (const auto& row : r.trace.rows) CHECK(row.best_value == 7.0);
}

TEST_CASE("sphere converges") {
  EcoConfig c;
  c.max_fes = 20000;
  c.seed = 1;
  CHECK(run_eco(sphere(10), c).best.value < 1e-6);
}

TEST_CASE("constrained problems reach the feasible region") {
  // minimize x0 + x1 subject to x0 >= 1, x1 >= 2
  Problem p{"lin", Bounds::uniform(2, -5, 5), [](std::span<const double> x) { return x[0] + x[1]; },
            {[](std::span<const double> x) { return 1.0 - x[0]; },
             [](std::span<const double> x) { return 2.0 - x[1]; }},
            3.0, 0.0, ""};
  EcoConfig c;
  c.max_fes = 20000;
  c.seed = 2;
  const auto r = run_eco(p, c);
  CHECK(r.best.feasible());
  CHECK(r.best.value == doctest::Approx(3.0).epsilon(1e-4));
}
