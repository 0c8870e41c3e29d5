#include "eco/classic.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eco::classic {

namespace {

using std::numbers::pi;
using X = std::span<const double>;

// Standard coefficient tables for the fixed-dimension functions.

constexpr std::array<double, 5> kFoxholeGrid = {-32.0, -16.0, 0.0, 16.0, 32.0};

constexpr std::array<double, 11> kKowalikA = {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                                              0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
constexpr std::array<double, 11> kKowalikInvB = {0.25, 0.5, 1.0,  2.0,  4.0, 6.0,
                                                 8.0,  10., 12.0, 14.0, 16.0};

constexpr std::array<double, 4> kHartmannC = {1.0, 1.2, 3.0, 3.2};
constexpr double kHartmann3A[4][3] = {{3, 10, 30}, {0.1, 10, 35}, {3, 10, 30}, {0.1, 10, 35}};
constexpr double kHartmann3P[4][3] = {{0.3689, 0.1170, 0.2673},
                                      {0.4699, 0.4387, 0.7470},
                                      {0.1091, 0.8732, 0.5547},
                                      {0.03815, 0.5743, 0.8828}};
constexpr double kHartmann6A[4][6] = {{10, 3, 17, 3.5, 1.7, 8},
                                      {0.05, 10, 17, 0.1, 8, 14},
                                      {3, 3.5, 1.7, 10, 17, 8},
                                      {17, 8, 0.05, 10, 0.1, 14}};
constexpr double kHartmann6P[4][6] = {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
                                      {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
                                      {0.2348, 0.1415, 0.3522, 0.2883, 0.3047, 0.6650},
                                      {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};

constexpr double kShekelA[10][4] = {{4, 4, 4, 4}, {1, 1, 1, 1}, {8, 8, 8, 8}, {6, 6, 6, 6},
                                    {3, 7, 3, 7}, {2, 9, 2, 9}, {5, 5, 3, 3}, {8, 1, 8, 1},
                                    {6, 2, 6, 2}, {7, 3.6, 7, 3.6}};
constexpr std::array<double, 10> kShekelC = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};

// Minima of the fixed-dimension functions at full precision (the published
// table rounds them to 4-6 digits).
constexpr double kSchwefelPerDim = -418.982887272433799;
constexpr double kSchwefelArgmin = 420.968746359982;

double penalty(double x, double a, double k, double m) {
  if (x > a) return k * std::pow(x - a, m);
  if (x < -a) return k * std::pow(-x - a, m);
  return 0.0;
}

double sq(double x) { return x * x; }

double hartmann(X x, const double (*a)[6], const double (*p)[6], std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (std::size_t j = 0; j < n; ++j) inner += a[i][j] * sq(x[j] - p[i][j]);
    s += kHartmannC[i] * std::exp(-inner);
  }
  return -s;
}

double shekel(X x, std::size_t m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double d = 0.0;
    for (std::size_t j = 0; j < 4; ++j) d += sq(x[j] - kShekelA[i][j]);
    s += 1.0 / (d + kShekelC[i]);
  }
  return -s;
}

ClassicFunction variable(int id, std::size_t dim, double lo, double hi, Objective f,
                         double optimum, std::string formula) {
  if (dim == 0) throw std::invalid_argument("dimension must be >= 1");
  ClassicFunction c{id,
                    Problem{"f" + std::to_string(id), Bounds::uniform(dim, lo, hi), std::move(f),
                            {}, optimum, 0.0, std::move(formula)},
                    id <= 7 ? Modality::unimodal : Modality::multimodal,
                    std::nullopt};
  return c;
}

ClassicFunction fixed(int id, Bounds bounds, Objective f, double optimum, std::string formula) {
  const std::size_t d = bounds.dim();
  return ClassicFunction{id,
                         Problem{"f" + std::to_string(id), std::move(bounds), std::move(f), {},
                                 optimum, 0.0, std::move(formula)},
                         Modality::multimodal, d};
}

}  // namespace

ClassicFunction make_classic(int id, std::size_t dim) {
  switch (id) {
    case 1:
      return variable(id, dim, -100, 100, [](X x) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
      }, 0.0, "sphere: sum x_i^2");
    case 2:
      return variable(id, dim, -10, 10, [](X x) {
        double s = 0.0;
        double p = 1.0;
        for (double v : x) {
          s += std::abs(v);
          p *= std::abs(v);
        }
        return s + p;
      }, 0.0, "Schwefel 2.22: sum |x_i| + prod |x_i|");
    case 3:
      return variable(id, dim, -100, 100, [](X x) {
        double s = 0.0;
        double partial = 0.0;
        for (double v : x) {
          partial += v;
          s += partial * partial;
        }
        return s;
      }, 0.0, "Schwefel 1.2: sum_i (sum_{j<=i} x_j)^2");
    case 4:
      return variable(id, dim, -100, 100, [](X x) {
        double m = 0.0;
        for (double v : x) m = std::max(m, std::abs(v));
        return m;
      }, 0.0, "Schwefel 2.21: max |x_i|");
    case 5:
      return variable(id, dim, -30, 30, [](X x) {
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
          s += 100.0 * sq(x[i + 1] - x[i] * x[i]) + sq(x[i] - 1.0);
        }
        return s;
      }, 0.0, "Rosenbrock");
    case 6:
      return variable(id, dim, -100, 100, [](X x) {
        double s = 0.0;
        for (double v : x) s += sq(std::floor(v + 0.5));
        return s;
      }, 0.0, "step: sum floor(x_i + 0.5)^2");
    case 7: {
      auto c = variable(id, dim, -1.28, 1.28, [](X x) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * sq(sq(x[i]));
        return s;
      }, 0.0, "quartic with noise: sum i x_i^4 + U[0,1)");
      c.problem.noise_amplitude = 1.0;
      return c;
    }
    case 8:
      return variable(id, dim, -500, 500, [](X x) {
        double s = 0.0;
        for (double v : x) s -= v * std::sin(std::sqrt(std::abs(v)));
        return s;
      }, kSchwefelPerDim * static_cast<double>(dim), "Schwefel 2.26: -sum x_i sin(sqrt|x_i|)");
    case 9:
      return variable(id, dim, -5.12, 5.12, [](X x) {
        double s = 0.0;
        for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
        return s;
      }, 0.0, "Rastrigin");
    case 10:
      return variable(id, dim, -32, 32, [](X x) {
        const auto n = static_cast<double>(x.size());
        double sq_sum = 0.0;
        double cos_sum = 0.0;
        for (double v : x) {
          sq_sum += v * v;
          cos_sum += std::cos(2.0 * pi * v);
        }
        return -20.0 * std::exp(-0.2 * std::sqrt(sq_sum / n)) - std::exp(cos_sum / n) + 20.0 +
               std::numbers::e;
      }, 0.0, "Ackley");
    case 11:
      return variable(id, dim, -600, 600, [](X x) {
        double s = 0.0;
        double p = 1.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
          s += x[i] * x[i];
          p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
        }
        return s / 4000.0 - p + 1.0;
      }, 0.0, "Griewank");
    case 12:
      return variable(id, dim, -50, 50, [](X x) {
        const std::size_t n = x.size();
        auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
        double s = 10.0 * sq(std::sin(pi * y(0)));
        for (std::size_t i = 0; i + 1 < n; ++i) {
          s += sq(y(i) - 1.0) * (1.0 + 10.0 * sq(std::sin(pi * y(i + 1))));
        }
        s += sq(y(n - 1) - 1.0);
        double u = 0.0;
        for (double v : x) u += penalty(v, 10, 100, 4);
        return pi / static_cast<double>(n) * s + u;
      }, 0.0, "generalized penalized 1 (y_i = 1 + (x_i + 1)/4, u(x,10,100,4))");
    case 13:
      return variable(id, dim, -50, 50, [](X x) {
        const std::size_t n = x.size();
        double s = sq(std::sin(3.0 * pi * x[0]));
        for (std::size_t i = 0; i + 1 < n; ++i) {
          s += sq(x[i] - 1.0) * (1.0 + sq(std::sin(3.0 * pi * x[i + 1])));
        }
        s += sq(x[n - 1] - 1.0) * (1.0 + sq(std::sin(2.0 * pi * x[n - 1])));
        double u = 0.0;
        for (double v : x) u += penalty(v, 5, 100, 4);
        return 0.1 * s + u;
      }, 0.0, "generalized penalized 2 (u(x,5,100,4))");
    case 14:
      return fixed(id, Bounds::uniform(2, -65.536, 65.536), [](X x) {
        double s = 1.0 / 500.0;
        for (std::size_t j = 0; j < 25; ++j) {
          const double a0 = kFoxholeGrid[j % 5];
          const double a1 = kFoxholeGrid[j / 5];
          s += 1.0 / (static_cast<double>(j + 1) + std::pow(x[0] - a0, 6) + std::pow(x[1] - a1, 6));
        }
        return 1.0 / s;
      }, 0.998003837794450, "Shekel's foxholes");
    case 15:
      return fixed(id, Bounds::uniform(4, -5, 5), [](X x) {
        double s = 0.0;
        for (std::size_t i = 0; i < kKowalikA.size(); ++i) {
          const double b = 1.0 / kKowalikInvB[i];
          s += sq(kKowalikA[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]));
        }
        return s;
      }, 3.0748598780560535e-4, "Kowalik");
    case 16:
      return fixed(id, Bounds::uniform(2, -5, 5), [](X x) {
        const double a = x[0] * x[0];
        const double b = x[1] * x[1];
        return 4.0 * a - 2.1 * a * a + a * a * a / 3.0 + x[0] * x[1] - 4.0 * b + 4.0 * b * b;
      }, -1.0316284534898776, "six-hump camel back");
    case 17:
      return fixed(id, Bounds({-5.0, 0.0}, {10.0, 15.0}), [](X x) {
        return sq(x[1] - 5.1 / (4.0 * pi * pi) * x[0] * x[0] + 5.0 / pi * x[0] - 6.0) +
               10.0 * (1.0 - 1.0 / (8.0 * pi)) * std::cos(x[0]) + 10.0;
      }, 0.39788735772973816, "Branin");
    case 18:
      return fixed(id, Bounds::uniform(2, -2, 2), [](X x) {
        const double a = x[0];
        const double b = x[1];
        return (1.0 + sq(a + b + 1.0) *
                          (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b)) *
               (30.0 + sq(2.0 * a - 3.0 * b) *
                           (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b));
      }, 3.0, "Goldstein-Price");
    case 19:
      return fixed(id, Bounds::uniform(3, 0, 1), [](X x) {
        double s = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
          double inner = 0.0;
          for (std::size_t j = 0; j < 3; ++j) inner += kHartmann3A[i][j] * sq(x[j] - kHartmann3P[i][j]);
          s += kHartmannC[i] * std::exp(-inner);
        }
        return -s;
      }, -3.862782147820756, "Hartmann 3-D");
    case 20:
      return fixed(id, Bounds::uniform(6, 0, 1),
                   [](X x) { return hartmann(x, kHartmann6A, kHartmann6P, 6); },
                   -3.3219951715842426, "Hartmann 6-D");
    case 21:
      return fixed(id, Bounds::uniform(4, 0, 10), [](X x) { return shekel(x, 5); },
                   -10.153199679058229, "Shekel m=5");
    case 22:
      return fixed(id, Bounds::uniform(4, 0, 10), [](X x) { return shekel(x, 7); },
                   -10.402940566818662, "Shekel m=7");
    case 23:
      return fixed(id, Bounds::uniform(4, 0, 10), [](X x) { return shekel(x, 10); },
                   -10.536409816692045, "Shekel m=10");
    default:
      throw UnknownFunction("f" + std::to_string(id));
  }
}

std::optional<int> parse_id(const std::string& name) {
  if (name.size() < 2 || std::tolower(static_cast<unsigned char>(name[0])) != 'f') return std::nullopt;
  int id = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    id = id * 10 + (name[i] - '0');
    if (id > kFunctionCount) return std::nullopt;
  }
  if (id < 1) return std::nullopt;
  return id;
}

std::vector<SpotValue> spot_values(int id, std::size_t dim) {
  const auto n = static_cast<double>(dim);
  switch (id) {
    case 1:
      return {{Point(dim, 0.0), 0.0}, {Point(dim, 1.0), n}};
    case 2:
      return {{Point(dim, 0.0), 0.0}, {Point(dim, 1.0), n + 1.0}};
    case 3:
      return {{Point(dim, 0.0), 0.0}, {Point(dim, 1.0), n * (n + 1.0) * (2.0 * n + 1.0) / 6.0}};
    case 4: {
      Point x(dim, 0.5);
      x.back() = -7.0;
      return {{Point(dim, 0.0), 0.0}, {x, 7.0}};
    }
    case 5:
      return {{Point(dim, 1.0), 0.0}, {Point(dim, 0.0), n - 1.0}};
    case 6:
      return {{Point(dim, 0.0), 0.0}, {Point(dim, 0.49), 0.0}, {Point(dim, 0.5), n}};
    case 7:
      return {{Point(dim, 0.0), 0.0}, {Point(dim, 1.0), n * (n + 1.0) / 2.0}};
    case 8:
      return {{Point(dim, kSchwefelArgmin), kSchwefelPerDim * n}, {Point(dim, 0.0), 0.0}};
    case 9:
      return {{Point(dim, 0.0), 0.0}, {Point(dim, 1.0), n}};
    case 10:
      return {{Point(dim, 0.0), 0.0}};
    case 11:
      return {{Point(dim, 0.0), 0.0}};
    case 12:
      return {{Point(dim, -1.0), 0.0}};
    case 13:
      return {{Point(dim, 1.0), 0.0}};
    case 14:
      return {{{-31.978330712590456, -31.97833157692572}, 0.998003837794450}};
    case 15:
      return {{{0.1928334532535868, 0.19083624024185586, 0.12311729988283682, 0.13576599032085118},
               3.0748598780560535e-4}};
    case 16:
      return {{{0.08984201492945389, -0.712656402369394}, -1.0316284534898776},
              {{-0.08984201492945389, 0.712656402369394}, -1.0316284534898776}};
    case 17:
      return {{{-pi, 12.275}, 0.39788735772973816},
              {{pi, 2.275}, 0.39788735772973816},
              {{3.0 * pi, 2.475}, 0.39788735772973816}};
    case 18:
      return {{{0.0, -1.0}, 3.0}};
    case 19:
      return {{{0.11461434447365138, 0.5556488496286947, 0.8525469533760089}, -3.862782147820756}};
    case 20:
      return {{{0.20170761932132544, 0.14678094542407122, 0.4767448511847063, 0.27534238953428514,
                0.3116518755236385, 0.6572751638904321},
               -3.3219951715842426}};
    case 21:
      return {{{4.000037152376549, 4.000133278657566, 4.000037151057555, 4.000133277090425},
               -10.153199679058229}};
    case 22:
      return {{{4.000572914277084, 4.000689366040889, 3.9994897107938447, 3.9996061600067923},
               -10.402940566818662}};
    case 23:
      return {{{4.000746530253313, 4.000592936779709, 3.9996633957714787, 3.9995097993299975},
               -10.536409816692045}};
    default:
      throw UnknownFunction("f" + std::to_string(id));
  }
}

}  // namespace eco::classic
