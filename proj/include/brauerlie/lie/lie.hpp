#pragma once

#include <memory>
#include <string>

#include "brauerlie/envelope/karoubi.hpp"
#include "brauerlie/report.hpp"

namespace brauerlie {

struct SemigroupObject {
  KarObject carrier;
  KarMorphism product;
};

struct LieObject {
  std::string name;
  KarObject carrier;
  KarMorphism bracket;  // carrier ⊗ carrier -> carrier
};
using LiePtr = std::shared_ptr<const LieObject>;

struct LieModule {
  LiePtr lie;
  KarObject carrier;
  KarMorphism action;  // lie carrier ⊗ carrier -> carrier
};

// Boundary-checked construction without axiom checks.
LiePtr make_lie_object(std::string name, KarObject carrier, KarMorphism bracket);
LieModule make_module(LiePtr lie, KarObject carrier, KarMorphism action);

SemigroupObject semigroup_from_dual_pair(Flavor flavor = Flavor::oriented);
Report check_semigroup(const SemigroupObject& s);
// bracket = product − product ∘ σ; throws if the axioms fail.
LiePtr lie_from_semigroup(const SemigroupObject& s, std::string name = "semigroup");
// The gl object on ↑↓.
LiePtr gl_object();

Report check_lie_axioms(const LieObject& lie);
Report check_module(const LieModule& m);
Report check_module_morphism(const KarMorphism& f, const LieModule& m, const LieModule& n);

// act_m∘(id⊗act_n) − act_mn∘(br⊗id) − act_n∘(id⊗act_m)∘(σ⊗id); with all
// three equal to one action this is the LMOD residual.
KarMorphism compatibility_residual(const LieObject& lie, const KarObject& carrier, const KarMorphism& act_m, const KarMorphism& act_n,
                                   const KarMorphism& act_mn);

LieModule adjoint_module(const LiePtr& lie);
LieModule trivial_module(const LiePtr& lie, const KarObject& carrier);
LieModule natural_module(const LiePtr& gl);
LieModule dual_natural_module(const LiePtr& gl);
LieModule canonical_module(const LiePtr& gl, const Word& word);
LieModule tensor_module(const LieModule& m, const LieModule& n);
LieModule dual_module(const LieModule& m);

// Degreewise building blocks shared with current modules.
KarMorphism tensor_action(const KarObject& lie_carrier, const KarMorphism& act_m, const KarObject& m, const KarMorphism& act_n,
                          const KarObject& n);
KarMorphism dual_action(const KarObject& lie_carrier, const KarMorphism& act, const KarObject& m);

// Unoriented so object on (ss, ½(id − crossing)) and its module on s.
LiePtr unoriented_so_object();
LieModule unoriented_natural_module(const LiePtr& so);
DiagMorphism so_eight_term_bracket();
DiagMorphism so_product();

}  // namespace brauerlie
