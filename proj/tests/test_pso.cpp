#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "eco/classic.hpp"
#include "eco/pso.hpp"

using namespace eco;

TEST_CASE("velocity update by hand") {
  const Bounds b = Bounds::uniform(1, -10, 10);
  PsoConfig c;
  Particle p;
  p.position = {1.0};
  p.velocity = {0.5};
  p.best_position = {2.0};
  const Point gbest{3.0};
  // v = 0.8*0.5 + 2*0.5*(2-1) + 2*0.25*(3-1) = 2.4
  const auto next = pso_move(p, gbest, Point{0.5}, Point{0.25}, c, b);
  CHECK(p.velocity[0] == doctest::Approx(2.4));
  CHECK(next[0] == doctest::Approx(3.4));
}

TEST_CASE("velocity is clamped to a fraction of the box") {
  const Bounds b = Bounds::uniform(1, 0, 1);
  PsoConfig c;
  Particle p;
  p.position = {0.0};
  p.velocity = {0.0};
  p.best_position = {1.0};
  pso_move(p, Point{1.0}, Point{1.0}, Point{1.0}, c, b);
  CHECK(p.velocity[0] == doctest::Approx(0.2));
}

TEST_CASE("sphere in two dimensions") {
  const auto f1 = classic::make_classic(1, 2);
  PsoConfig c;
  c.max_fes = 10000;
  c.seed = 7;
  const auto r = run_pso(f1.problem, c);
  CHECK(r.best.value <= 1e-3);
  CHECK(r.fes_used == 10000);
}

TEST_CASE("accounting, determinism and trace monotonicity") {
  auto counter = std::make_shared<std::size_t>(0);
  const auto f9 = classic::make_classic(9, 5);
  Problem p = f9.problem;
  auto inner = p.objective;
  p.objective = [counter, inner](std::span<const double> x) {
    ++*counter;
    return inner(x);
  };
  PsoConfig c;
  c.max_fes = 1234;
  c.seed = 3;
  const auto a = run_pso(p, c);
  CHECK(*counter == a.fes_used);
  CHECK(a.fes_used == 1234);
  CHECK(a.trace.rows.size() == a.iterations + 1);
  for (std::size_t i = 1; i < a.trace.rows.size(); ++i) {
    CHECK(a.trace.rows[i].best_value <= a.trace.rows[i - 1].best_value);
  }
  CHECK(p.bounds.contains(a.best_position));
  CHECK(inner(a.best_position) == a.best.value);
  const auto b = run_pso(p, c);
  CHECK(b.best.value == a.best.value);
  CHECK(b.best_position == a.best_position);
}
