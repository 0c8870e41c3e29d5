#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eco/problem.hpp"

namespace eco::classic {

enum class Modality { unimodal, multimodal };

struct ClassicFunction {
  int id = 0;  ///< 1..23
  Problem problem;
  Modality modality = Modality::unimodal;
  std::optional<std::size_t> fixed_dim;
};

inline constexpr int kFunctionCount = 23;

/// Builds F<id>. `dim` applies to F1-F13; F14-F23 have fixed dimension.
/// Throws UnknownFunction for ids outside 1..23.
ClassicFunction make_classic(int id, std::size_t dim = 30);

/// Parses "f7" / "F7" to 7; std::nullopt otherwise.
std::optional<int> parse_id(const std::string& name);

struct SpotValue {
  Point x;
  double value;
};

/// Reference evaluations: every function's known optimum point plus a few
/// hand-checkable anchors. Variable-dimension functions use `dim`.
std::vector<SpotValue> spot_values(int id, std::size_t dim = 30);

}  // namespace eco::classic
