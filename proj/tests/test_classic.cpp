#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "eco/classic.hpp"

using namespace eco;
using namespace eco::classic;

namespace {

// Optima as printed in the published table, with the number of significant
// digits shown there.
struct PrintedOptimum {
  int id;
  double value;
  double tolerance;
};

constexpr PrintedOptimum kPrinted[] = {
    {14, 0.9980, 5e-5},    {15, 0.0003075, 5e-8}, {16, -1.0316, 5e-5},  {17, 0.3979, 5e-5},
    {18, 3.0, 1e-12},      {19, -3.8628, 5e-5},   {20, -3.3220, 5e-5},  {21, -10.1532, 5e-5},
    {22, -10.4029, 5e-5},  {23, -10.5364, 5e-5},
};

}  // namespace

TEST_CASE("catalog shape") {
  for (int id = 1; id <= kFunctionCount; ++id) {
    const auto f = make_classic(id, 30);
    CHECK(f.id == id);
    CHECK(f.problem.constraints.empty());
    CHECK(f.problem.known_optimum.has_value());
    CHECK(f.modality == (id <= 7 ? Modality::unimodal : Modality::multimodal));
    if (id <= 13) {
      CHECK_FALSE(f.fixed_dim.has_value());
      CHECK(f.problem.dim() == 30);
    } else {
      REQUIRE(f.fixed_dim.has_value());
      CHECK(f.problem.dim() == *f.fixed_dim);
    }
  }
  CHECK(make_classic(14).problem.dim() == 2);
  CHECK(make_classic(15).problem.dim() == 4);
  CHECK(make_classic(19).problem.dim() == 3);
  CHECK(make_classic(20).problem.dim() == 6);
  CHECK(make_classic(23).problem.dim() == 4);
  CHECK_THROWS_AS(make_classic(0), UnknownFunction);
  CHECK_THROWS_AS(make_classic(24), UnknownFunction);
}

TEST_CASE("id parsing") {
  CHECK(parse_id("f7") == 7);
  CHECK(parse_id("F23") == 23);
  CHECK_FALSE(parse_id("f24").has_value());
  CHECK_FALSE(parse_id("f0").has_value());
  CHECK_FALSE(parse_id("x1").has_value());
  CHECK_FALSE(parse_id("f").has_value());
  CHECK_FALSE(parse_id("f1a").has_value());
}

TEST_CASE("spot values") {
  for (std::size_t dim : {2u, 5u, 30u}) {
    for (int id = 1; id <= kFunctionCount; ++id) {
      const auto f = make_classic(id, dim);
      for (const auto& spot : spot_values(id, dim)) {
        CAPTURE(id);
        CAPTURE(dim);
        const double v = f.problem.objective(spot.x);
        CHECK(v == doctest::Approx(spot.value).epsilon(1e-9).scale(1.0));
      }
    }
  }
}

TEST_CASE("documented examples") {
  const auto f1 = make_classic(1, 2);
  CHECK(f1.problem.objective(Point{1, 1}) == 2.0);
  const auto f9 = make_classic(9, 30);
  CHECK(f9.problem.objective(Point(30, 0.0)) == 0.0);
  const auto f6 = make_classic(6, 3);
  CHECK(f6.problem.objective(Point{0.49, -0.49, 0.2}) == 0.0);
  CHECK(f6.problem.objective(Point{0.5, 0.0, 0.0}) == 1.0);
  CHECK(make_classic(8, 30).problem.known_optimum.value() ==
        doctest::Approx(-418.98 * 30).epsilon(1e-5));
}

TEST_CASE("optimum points reach the known optimum within 1e-6") {
  for (int id = 1; id <= kFunctionCount; ++id) {
    const auto f = make_classic(id, 30);
    const auto spots = spot_values(id, 30);
    CAPTURE(id);
    const double v = f.problem.objective(spots.front().x);
    CHECK(std::abs(v - *f.problem.known_optimum) <= 1e-6 * std::max(1.0, std::abs(v)));
  }
}

TEST_CASE("known optima agree with the printed table") {
  for (const auto& p : kPrinted) {
    CAPTURE(p.id);
    CHECK(std::abs(*make_classic(p.id).problem.known_optimum - p.value) <= p.tolerance);
  }
}

TEST_CASE("known optima are not beaten by random search") {
  Rng rng(5);
  for (int id = 1; id <= kFunctionCount; ++id) {
    const auto f = make_classic(id, 5);
    for (int i = 0; i < 2000; ++i) {
      const auto x = sample_uniform(f.problem.bounds, rng);
      CHECK(f.problem.objective(x) >= *f.problem.known_optimum - 1e-9);
    }
  }
}

TEST_CASE("symmetric functions are even, Schwefel 2.26 is odd") {
  Rng rng(6);
  for (int id : {1, 2, 3, 4, 6, 8, 9, 10, 11}) {
    const double sign = id == 8 ? -1.0 : 1.0;
    const auto f = make_classic(id, 7);
    for (int i = 0; i < 500; ++i) {
      auto x = sample_uniform(f.problem.bounds, rng);
      Point neg(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) neg[j] = -x[j];
      CAPTURE(id);
      CHECK(f.problem.objective(neg) == doctest::Approx(sign * f.problem.objective(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("quartic noise") {
  const auto f7 = make_classic(7, 10);
  CHECK(f7.problem.noisy());
  EvalBudget budget(20000);
  Rng rng(7);
  const Point x(10, 0.3);
  const double base = f7.problem.objective(x);
  double sum = 0.0;
  double lo = 1e9, hi = -1e9;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double v = evaluate(f7.problem, x, budget, rng).value;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
  }
  CHECK(hi - lo <= 1.0);
  CHECK(lo >= base);
  // averaging recovers the noiseless part plus the mean of U[0,1)
  CHECK(sum / n - 0.5 == doctest::Approx(base).epsilon(0.01).scale(1.0));
}
