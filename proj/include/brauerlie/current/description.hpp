#pragma once

#include <optional>
#include <string>

#include "brauerlie/current/current.hpp"

namespace brauerlie {

LiePtr lie_from_name(const std::string& name);
LieModule module_from_json(const Json& j, const LiePtr& lie);
CurrentPtr current_from_json(const Json& j, const LiePtr& lie, int degree_bound = 2);

// {"lie", "delta", "degree_bound", "V", "W", "target", "n"}
struct CurrentProblem {
  LiePtr lie;
  std::optional<Rational> delta;
  int degree_bound = 2;
  CurrentPtr v, w;
  std::optional<std::string> target;
  std::optional<int> n;
};

CurrentProblem problem_from_json(const Json& j);
MorphismSpaceResult solve_problem(const CurrentProblem& p);

}  // namespace brauerlie
