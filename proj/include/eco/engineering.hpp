#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eco/problem.hpp"

namespace eco::engineering {

enum class Id { rc15, rc17, rc19, rc20, rc31 };

struct Reference {
  Point x;
  double f;
};

struct EngineeringProblem {
  Id id;
  Problem problem;
  Reference reference;
};

/// All five ids in catalog order.
std::vector<Id> all_ids();
std::string to_string(Id id);
std::optional<Id> parse_id(const std::string& name);

EngineeringProblem make_engineering(Id id);
EngineeringProblem make_engineering(const std::string& name);

struct ConstraintValue {
  std::size_t index;  ///< 1-based, in published order
  double value;
  bool satisfied;  ///< value <= 0
};

std::vector<ConstraintValue> constraint_report(const Problem& problem, std::span<const double> x);
std::vector<ConstraintValue> constraint_report(Id id, std::span<const double> x);

}  // namespace eco::engineering
