#include "eco/engineering.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace eco::engineering {

namespace {

using X = std::span<const double>;

double sq(double x) { return x * x; }

// Weight minimization of a speed reducer, x = (b, m, p, l1, l2, d1, d2).
EngineeringProblem speed_reducer() {
  Problem p{
      "rc15",
      Bounds({2.6, 0.7, 17.0, 7.3, 7.3, 2.9, 5.0}, {3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5}),
      [](X x) {
        return 0.7854 * x[0] * sq(x[1]) * (3.3333 * sq(x[2]) + 14.9334 * x[2] - 43.0934) -
               1.508 * x[0] * (sq(x[5]) + sq(x[6])) +
               7.477 * (x[5] * x[5] * x[5] + x[6] * x[6] * x[6]) +
               0.7854 * (x[3] * sq(x[5]) + x[4] * sq(x[6]));
      },
      {
          [](X x) { return 27.0 / (x[0] * sq(x[1]) * x[2]) - 1.0; },
          [](X x) { return 397.5 / (x[0] * sq(x[1]) * sq(x[2])) - 1.0; },
          [](X x) { return 1.93 * std::pow(x[3], 3) / (x[1] * x[2] * std::pow(x[5], 4)) - 1.0; },
          [](X x) { return 1.93 * std::pow(x[4], 3) / (x[1] * x[2] * std::pow(x[6], 4)) - 1.0; },
          [](X x) {
            return std::sqrt(sq(745.0 * x[3] / (x[1] * x[2])) + 16.91e6) /
                       (110.0 * std::pow(x[5], 3)) - 1.0;
          },
          [](X x) {
            return std::sqrt(sq(745.0 * x[4] / (x[1] * x[2])) + 157.5e6) /
                       (85.0 * std::pow(x[6], 3)) - 1.0;
          },
          [](X x) { return x[1] * x[2] / 40.0 - 1.0; },
          [](X x) { return 5.0 * x[1] / x[0] - 1.0; },
          [](X x) { return x[0] / (12.0 * x[1]) - 1.0; },
          [](X x) { return (1.5 * x[5] + 1.9) / x[3] - 1.0; },
          [](X x) { return (1.1 * x[6] + 1.9) / x[4] - 1.0; },
      },
      2994.42447,
      0.0,
      "speed reducer weight; cubic-shaft coefficient 7.477, g3/g4 use l1^3 and l2^3, "
      "g5 uses l1 with 16.91e6, g6 uses l2 with 157.5e6"};
  return {Id::rc15, std::move(p),
          {{3.5, 0.7, 17.0, 7.3, 7.71531991, 3.35054095, 5.28665446}, 2994.42447}};
}

// Tension/compression spring, x = (d, D, N).
EngineeringProblem spring() {
  Problem p{"rc17",
            Bounds({0.05, 0.25, 2.0}, {2.0, 1.3, 15.0}),
            [](X x) { return (x[2] + 2.0) * x[1] * sq(x[0]); },
            {
                [](X x) { return 1.0 - std::pow(x[1], 3) * x[2] / (71785.0 * std::pow(x[0], 4)); },
                [](X x) {
                  return (4.0 * sq(x[1]) - x[0] * x[1]) /
                             (12566.0 * (x[1] * std::pow(x[0], 3) - std::pow(x[0], 4))) +
                         1.0 / (5108.0 * sq(x[0])) - 1.0;
                },
                [](X x) { return 1.0 - 140.45 * x[0] / (sq(x[1]) * x[2]); },
                [](X x) { return (x[0] + x[1]) / 1.5 - 1.0; },
            },
            0.01266523,
            0.0,
            "spring weight (N + 2) D d^2; shear, surge and deflection constraints in the "
            "standard normalized form"};
  return {Id::rc17, std::move(p), {{0.05169231, 0.35679602, 11.2843781}, 0.01266523}};
}

// Welded beam, x = (h, l, t, b).
EngineeringProblem welded_beam() {
  constexpr double P = 6000.0;
  constexpr double L = 14.0;
  constexpr double E = 30e6;
  constexpr double G = 12e6;
  constexpr double tau_max = 13600.0;
  constexpr double sigma_max = 30000.0;
  constexpr double delta_max = 0.25;

  auto cost = [](X x) {
    return 1.10471 * sq(x[0]) * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1]);
  };
  auto tau = [](X x) {
    const double t1 = P / (std::sqrt(2.0) * x[0] * x[1]);
    const double M = P * (L + x[1] / 2.0);
    const double R = std::sqrt(sq(x[1]) / 4.0 + sq((x[0] + x[2]) / 2.0));
    const double J = 2.0 * (std::sqrt(2.0) * x[0] * x[1] * (sq(x[1]) / 4.0 + sq((x[0] + x[2]) / 2.0)));
    const double t2 = M * R / J;
    return std::sqrt(sq(t1) + 2.0 * t1 * t2 * x[1] / (2.0 * R) + sq(t2));
  };
  auto buckling = [](X x) {
    return 4.013 * E * std::sqrt(sq(x[2]) * std::pow(x[3], 6) / 36.0) / sq(L) *
           (1.0 - x[2] / (2.0 * L) * std::sqrt(E / (4.0 * G)));
  };

  Problem p{"rc19",
            Bounds({0.125, 0.1, 0.1, 0.1}, {2.0, 10.0, 10.0, 2.0}),
            cost,
            {
                [tau](X x) { return tau(x) - tau_max; },
                [](X x) { return 6.0 * P * L / (x[3] * sq(x[2])) - sigma_max; },
                [](X x) { return 6.0 * P * L * L * L / (E * sq(x[2]) * x[3]) - delta_max; },
                [](X x) { return x[0] - x[3]; },
                [buckling](X x) { return P - buckling(x); },
                [](X x) { return 0.125 - x[0]; },
                [cost](X x) { return cost(x) - 5.0; },
            },
            1.69524716,
            0.0,
            "welded beam cost 1.10471 h^2 l + 0.04811 t b (14 + l); "
            "tau' = P/(sqrt2 h l), J = 2 sqrt2 h l (l^2/4 + ((h+t)/2)^2), "
            "delta = 6PL^3/(E t^2 b), Pc = 4.013 E sqrt(t^2 b^6/36)/L^2 (1 - t/(2L) sqrt(E/4G))"};
  return {Id::rc19, std::move(p), {{0.20572964, 3.25312004, 9.03662391, 0.20572964}, 1.69524716}};
}

// Three-bar truss, x = (A1, A2).
EngineeringProblem three_bar_truss() {
  constexpr double l = 100.0;
  constexpr double P = 2.0;
  constexpr double sigma = 2.0;
  const double r2 = std::sqrt(2.0);
  Problem p{"rc20",
            Bounds({0.0, 0.0}, {1.0, 1.0}),
            [r2](X x) { return (2.0 * r2 * x[0] + x[1]) * l; },
            {
                [r2](X x) { return (r2 * x[0] + x[1]) / (r2 * sq(x[0]) + 2.0 * x[0] * x[1]) * P - sigma; },
                [r2](X x) { return x[1] / (r2 * sq(x[0]) + 2.0 * x[0] * x[1]) * P - sigma; },
                [r2](X x) { return 1.0 / (r2 * x[1] + x[0]) * P - sigma; },
            },
            263.895843,
            0.0,
            "three-bar truss volume (2 sqrt2 A1 + A2) l with stress constraints over "
            "sqrt2 A1^2 + 2 A1 A2 and A1 + sqrt2 A2"};
  return {Id::rc20, std::move(p), {{0.78867513, 0.40824830}, 263.895843}};
}

// Gear train, x = (Ta, Tb, Td, Tf); tooth counts are rounded to integers.
EngineeringProblem gear_train() {
  Problem p{"rc31",
            Bounds::uniform(4, 0.01, 60.0),
            [](X x) {
              // the box starts at 0.01, so a tooth count can round to zero
              const double ta = std::max(1.0, std::round(x[0]));
              const double tb = std::max(1.0, std::round(x[1]));
              const double td = std::max(1.0, std::round(x[2]));
              const double tf = std::max(1.0, std::round(x[3]));
              return sq(1.0 / 6.931 - tb * td / (ta * tf));
            },
            {},
            2.7009e-12,
            0.0,
            "gear ratio error (1/6.931 - Tb Td / (Ta Tf))^2 on rounded tooth counts, "
            "12 <= x_i <= 60"};
  for (std::size_t i = 0; i < 4; ++i) p.constraints.push_back([i](X x) { return 12.0 - x[i]; });
  for (std::size_t i = 0; i < 4; ++i) p.constraints.push_back([i](X x) { return x[i] - 60.0; });
  return {Id::rc31, std::move(p), {{49.3000403, 19.3605917, 15.8481360, 42.8673784}, 2.7009e-12}};
}

}  // namespace

std::vector<Id> all_ids() { return {Id::rc15, Id::rc17, Id::rc19, Id::rc20, Id::rc31}; }

std::string to_string(Id id) {
  switch (id) {
    case Id::rc15:
      return "rc15";
    case Id::rc17:
      return "rc17";
    case Id::rc19:
      return "rc19";
    case Id::rc20:
      return "rc20";
    case Id::rc31:
      return "rc31";
  }
  return "?";
}

std::optional<Id> parse_id(const std::string& name) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (Id id : all_ids()) {
    if (to_string(id) == lower) return id;
  }
  return std::nullopt;
}

EngineeringProblem make_engineering(Id id) {
  switch (id) {
    case Id::rc15:
      return speed_reducer();
    case Id::rc17:
      return spring();
    case Id::rc19:
      return welded_beam();
    case Id::rc20:
      return three_bar_truss();
    case Id::rc31:
      return gear_train();
  }
  throw UnknownFunction("?");
}

EngineeringProblem make_engineering(const std::string& name) {
  const auto id = parse_id(name);
  if (!id) throw UnknownFunction(name);
  return make_engineering(*id);
}

std::vector<ConstraintValue> constraint_report(const Problem& problem, std::span<const double> x) {
  if (x.size() != problem.dim()) throw DimensionMismatch(problem.dim(), x.size());
  std::vector<ConstraintValue> out;
  out.reserve(problem.constraints.size());
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    const double g = problem.constraints[i](x);
    out.push_back({i + 1, g, g <= 0.0});
  }
  return out;
}

std::vector<ConstraintValue> constraint_report(Id id, std::span<const double> x) {
  return constraint_report(make_engineering(id).problem, x);
}

}  // namespace eco::engineering
