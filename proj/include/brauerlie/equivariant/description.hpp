#pragma once

#include <optional>
#include <string>

#include "brauerlie/equivariant/equivariant.hpp"

namespace brauerlie {

struct EquivariantProblem {
  std::string name;
  FDLieAlgebra g;
  FDAlgebra a;
  GroupActionOnSpace g_action, a_action;
  std::optional<std::vector<CVec>> ideal;
  std::optional<std::vector<CMatrix>> module;
  bool validate_module = true;
};

EquivariantProblem equivariant_from_json(const Json& j);

struct EquivariantSuiteResult {
  Report report;
  Json summary;
};

// Isotypic decompositions, the map algebra, the stabilizer, the zero-map checks
// for every character nontrivial on it, and the evaluation module when given.
EquivariantSuiteResult run_equivariant_suite(const EquivariantProblem& p);

}  // namespace brauerlie
