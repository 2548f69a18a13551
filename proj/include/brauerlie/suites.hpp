#pragma once

#include <vector>

#include "brauerlie/report.hpp"

namespace brauerlie {

// All words over {u, d} of length at most max_len, shortest first.
std::vector<Word> oriented_words(std::size_t max_len);

// Semigroup, SKEW, JACOBI and LMOD checks for the gl and so objects and their standard modules.
Report lie_axioms_suite();
// Compatibility of every current construction over gl on words up to length 3,
// plus the braiding, cap and cup as current-module morphisms.
Report current_construction_suite(int degree_bound);

}  // namespace brauerlie
