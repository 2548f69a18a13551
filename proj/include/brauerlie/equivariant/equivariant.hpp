#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauerlie/diagram/render.hpp"
#include "brauerlie/exactmath/matrix.hpp"
#include "brauerlie/report.hpp"

namespace brauerlie {

using CVec = Vec<CycloNumber>;

// Z/f1 × ... × Z/fr; empty factor list is the trivial group.
class FiniteAbelianGroup {
 public:
  using Element = std::vector<unsigned>;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<unsigned> factors);

  const std::vector<unsigned>& factors() const { return f_; }
  std::size_t order() const;
  unsigned exponent() const;
  // Lexicographic, identity first.
  std::vector<Element> elements() const;
  Element identity() const { return Element(f_.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, unsigned k) const;
  unsigned element_order(const Element& a) const;

 private:
  std::vector<unsigned> f_;
};

// g ↦ prod_i zeta_{f_i}^(k_i g_i), valued in the cyclotomic field of the exponent.
struct Character {
  std::vector<unsigned> exponents;

  CycloNumber value(const FiniteAbelianGroup& g, const FiniteAbelianGroup::Element& x) const;
  bool is_trivial() const;
  friend bool operator==(const Character&, const Character&) = default;
};

std::vector<Character> characters(const FiniteAbelianGroup& g);
Character character_product(const FiniteAbelianGroup& g, const Character& a, const Character& b);
Character character_inverse(const FiniteAbelianGroup& g, const Character& a);
bool trivial_on(const FiniteAbelianGroup& g, const Character& chi, const std::vector<FiniteAbelianGroup::Element>& xs);
std::string character_str(const Character& chi);

// Structure constants: c[i][j] is the product (or bracket) of basis vectors i and j.
struct FDAlgebra {
  std::size_t dim = 0;
  std::vector<std::vector<CVec>> c;
  bool commutative = true;
  std::optional<CVec> unit;

  CVec mul(const CVec& a, const CVec& b) const;
  Report validate() const;
};

// k[t]/(p) with basis 1, t, ..., t^{d-1}; p monic, coefficients low to high.
FDAlgebra quotient_algebra(const QPoly& monic);
FDAlgebra truncated_polynomial_algebra(unsigned k);

struct FDLieAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::vector<std::vector<CVec>> c;

  CVec bracket(const CVec& a, const CVec& b) const;
  Report validate() const;
};

// Basis e, h, f with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
FDLieAlgebra sl2();

struct GroupActionOnSpace {
  FiniteAbelianGroup group;
  std::vector<CMatrix> generators;  // one per invariant factor
  std::size_t space_dim = 0;        // only consulted when there are no generators

  CMatrix matrix(const FiniteAbelianGroup::Element& x) const;
  std::size_t dim() const;
  Report validate() const;
};

Report check_automorphisms(const GroupActionOnSpace& act, const FDLieAlgebra& g);
Report check_automorphisms(const GroupActionOnSpace& act, const FDAlgebra& a);

// (1/|Γ|) Σ χ(g)⁻¹ ρ(g)
CMatrix isotypic_projector(const GroupActionOnSpace& act, const Character& chi);
Report check_isotypic_decomposition(const GroupActionOnSpace& act);
// Independent columns of the projector.
std::vector<CVec> isotypic_basis(const GroupActionOnSpace& act, const Character& chi);

struct MaxIdeal {
  std::vector<CVec> basis;
  CVec ev;  // A -> k, kills the ideal, multiplicative
};

// Validates closure, codimension one and A/m ≅ k.
MaxIdeal make_max_ideal(const FDAlgebra& a, std::vector<CVec> basis);

struct Stabilizer {
  std::vector<FiniteAbelianGroup::Element> elements;
  std::vector<unsigned> invariants;  // d1 | d2 | ...
};

Stabilizer ideal_stabilizer(const FDAlgebra& a, const GroupActionOnSpace& act, const MaxIdeal& m);
Report twisted_evaluation_zero_check(const FDAlgebra& a, const GroupActionOnSpace& act, const MaxIdeal& m, const Character& f);

struct MapAlgebraPiece {
  Character chi;            // g_chi ⊗ A_{chi^-1}
  std::vector<CVec> g_basis, a_basis;
};

struct EquivariantMapAlgebra {
  FDLieAlgebra g;
  FDAlgebra a;
  GroupActionOnSpace g_action, a_action;
  std::vector<MapAlgebraPiece> pieces;
  std::vector<CVec> basis;  // in g ⊗ A, index i * dim A + j
  std::vector<std::size_t> piece_of;
  std::vector<std::pair<CVec, CVec>> factors;  // basis[i] = factors[i].first ⊗ factors[i].second
  std::vector<std::vector<CVec>> structure;  // bracket of basis elements in basis coordinates
  std::size_t fixed_rank = 0;
  Report report;

  std::size_t dimension() const { return basis.size(); }
  Json to_json() const;
};

CVec tensor_bracket(const FDLieAlgebra& g, const FDAlgebra& a, const CVec& x, const CVec& y);
EquivariantMapAlgebra equivariant_map_algebra(const FDLieAlgebra& g, const FDAlgebra& a, GroupActionOnSpace g_action,
                                              GroupActionOnSpace a_action);

struct EquivariantEvaluationModule {
  std::size_t dim = 0;
  std::vector<Character> allowed;         // characters trivial on the stabilizer
  std::vector<CMatrix> actions;           // one per map-algebra basis element
  Report report;
};

// rho gives one matrix per basis vector of g; only its restriction to g_m is used.
EquivariantEvaluationModule equivariant_evaluation_module(const EquivariantMapAlgebra& ema, const MaxIdeal& m,
                                                          const std::vector<CMatrix>& rho, bool validate_module = true);

}  // namespace brauerlie
