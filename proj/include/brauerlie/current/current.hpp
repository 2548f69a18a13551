#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "brauerlie/exactmath/matrix.hpp"
#include "brauerlie/lie/lie.hpp"

namespace brauerlie {

class CurrentModule;
using CurrentPtr = std::shared_ptr<const CurrentModule>;

enum class CurrentRule { trivial, evaluation, induced, truncated, extension, tensor, dual, explicit_actions };
std::string rule_name(CurrentRule r);

// Module over L ⊗ k[t], given by one action morphism per monomial tⁿ.
class CurrentModule {
 public:
  struct Data {
    CurrentRule rule = CurrentRule::trivial;
    LiePtr lie;
    KarObject carrier;
    std::optional<LieModule> base;  // evaluation, induced
    Rational point;                 // evaluation, extension
    KarMorphism endo;               // induced
    KarMorphism tau;                // extension
    CurrentPtr left, right;         // truncated/dual use left only
    int k = 0;                      // truncated
    std::map<int, KarMorphism> actions;
  };

  explicit CurrentModule(Data d) : d_(std::move(d)) {}

  const LiePtr& lie() const { return d_.lie; }
  const KarObject& carrier() const { return d_.carrier; }
  CurrentRule rule() const { return d_.rule; }
  const Data& data() const { return d_; }

  // lie carrier ⊗ carrier -> carrier; zero for n < 0.
  KarMorphism action(int n) const;
  LieModule underlying() const { return LieModule{d_.lie, d_.carrier, action(0)}; }

 private:
  KarMorphism compute(int n) const;
  Data d_;
  mutable std::mutex mu_;
  mutable std::map<int, KarMorphism> cache_;
};

CurrentPtr current_trivial(const LiePtr& lie, const KarObject& carrier);
CurrentPtr current_evaluation(const Rational& point, const LieModule& base);
// endo must be an endomorphism of the underlying L-module.
CurrentPtr current_induced(const LieModule& base, const KarMorphism& endo);
CurrentPtr current_truncated(const CurrentPtr& inner, int k);
// tau: L ⊗ V -> W must be a current morphism from (adjoint at point) ⊗ V, checked up to degree_bound.
CurrentPtr make_extension(const CurrentPtr& v, const CurrentPtr& w, const Rational& point, const KarMorphism& tau,
                          int degree_bound = 2);
CurrentPtr current_tensor(const CurrentPtr& v, const CurrentPtr& w);
CurrentPtr current_dual(const CurrentPtr& v);
CurrentPtr current_explicit(const LiePtr& lie, const KarObject& carrier, std::map<int, KarMorphism> actions);

// All m, n >= 0 with m + n <= degree_bound.
Report check_current_compatibility(const CurrentModule& m, int degree_bound);
// f ∘ act_V(n) = act_W(n) ∘ (id ⊗ f) for n <= degree_bound.
Report check_current_morphism(const KarMorphism& f, const CurrentModule& v, const CurrentModule& w, int degree_bound);

struct SolverConfig {
  int degree_bound = 2;
  std::optional<Rational> delta;  // required once any coefficient depends on delta
};

struct MorphismSpaceResult {
  struct Unknown {
    std::size_t row, col;  // block position
    Matching matching;
  };
  int degree_bound = 0;
  std::optional<Rational> delta;
  KarObject source, target;
  std::vector<Unknown> unknowns;
  AffineSolutionSpace<Rational> space;

  std::size_t dimension() const { return space.dimension(); }
  bool consistent() const { return space.consistent(); }
  BlockMatrix blocks(const Vec<Rational>& coords) const;
  KarMorphism morphism(const Vec<Rational>& coords) const;
  Json to_json() const;
};

MorphismSpaceResult current_morphism_space(const CurrentModule& v, const CurrentModule& w, const SolverConfig& cfg);
// Morphisms f with I_n(f) = target; delta is fixed to n.
MorphismSpaceResult incarnation_preimage_space(const CurrentModule& v, const CurrentModule& w, int n, const QMatrix& target,
                                               int degree_bound = 2);

// canonical action on u^3 composed with coeff·(cup ⊗ id) against the identity.
Report right_inverse_check(const Rational& coeff = Rational(1, 3), std::optional<Rational> delta = Rational(2));

}  // namespace brauerlie
