#pragma once

#include <string_view>

#include "brauerlie/diagram/morphism.hpp"

namespace brauerlie {

// Parses the diagram expression language:
//   expr  := ["+"|"-"] term (("+"|"-") term)*
//   term  := [coeff ["*"]] chain          (a bare coeff is a scalar)
//   chain := group (";" group)*           f ; g = f ∘ g
//   group := atom ("@" atom)*             tensor, binds tighter
//   atom  := id(w) | cap(w) | cup(w) | x(l,l) | perm[i,...](w) | asym(k) | delta | "(" expr ")"
DiagMorphism parse_expr(std::string_view text);

}  // namespace brauerlie
