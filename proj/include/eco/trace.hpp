#pragma once

#include <cstddef>
#include <vector>

#include "eco/problem.hpp"

namespace eco {

struct TraceRow {
  std::size_t iter = 0;  ///< 0 is the initialization row
  std::size_t fes = 0;
  double best_value = 0.0;
  double best_violation = 0.0;
  double div = 0.0;
};

struct RunTrace {
  std::vector<TraceRow> rows;
};

struct RunResult {
  Point best_position;
  Evaluation best;
  RunTrace trace;
  std::size_t fes_used = 0;
  std::size_t iterations = 0;
};

}  // namespace eco
