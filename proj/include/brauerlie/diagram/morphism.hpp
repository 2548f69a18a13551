#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauerlie/diagram/word.hpp"
#include "brauerlie/exactmath/delta_poly.hpp"

namespace brauerlie {

// Perfect matching of boundary points.  Bottom point i has index i, top point
// j has index |domain| + j; partner[p] is the point paired with p.
struct Matching {
  std::vector<std::uint8_t> partner;

  std::size_t size() const { return partner.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

// Pairs (p, q) with p < q, ordered by p.
std::vector<std::pair<int, int>> matching_pairs(const Matching& m);
Matching matching_from_pairs(std::size_t points, const std::vector<std::pair<int, int>>& pairs);
// Throws unless m is a valid matching domain -> codomain.
void validate_matching(const Matching& m, const Word& domain, const Word& codomain);
bool is_valid_matching(const Matching& m, const Word& domain, const Word& codomain);
// All valid matchings in lexicographic order of partner arrays.
std::vector<Matching> enumerate_matchings(const Word& domain, const Word& codomain);

// Linear combination of matchings with delta-polynomial coefficients, kept in
// normal form: no zero coefficients, terms ordered by matching.
class DiagMorphism {
 public:
  using Terms = std::map<Matching, DeltaPoly>;

  DiagMorphism() = default;
  DiagMorphism(Word domain, Word codomain);  // the zero morphism
  static DiagMorphism single(Word domain, Word codomain, Matching m, DeltaPoly coeff = DeltaPoly(1));
  static DiagMorphism scalar(DeltaPoly c) { return single(Word(), Word(), Matching{}, std::move(c)); }

  const Word& domain() const { return dom_; }
  const Word& codomain() const { return cod_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Flavor> flavor() const;
  DeltaPoly coeff(const Matching& m) const;

  // Adds c to the coefficient of m without validating m.
  void accumulate(const Matching& m, const DeltaPoly& c);

  DiagMorphism& operator+=(const DiagMorphism& o);
  DiagMorphism& operator-=(const DiagMorphism& o);
  friend DiagMorphism operator+(DiagMorphism a, const DiagMorphism& b) { return a += b; }
  friend DiagMorphism operator-(DiagMorphism a, const DiagMorphism& b) { return a -= b; }
  DiagMorphism operator-() const;
  friend DiagMorphism operator*(const DeltaPoly& c, const DiagMorphism& f);

  friend bool operator==(const DiagMorphism& a, const DiagMorphism& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.terms_ == b.terms_;
  }

 private:
  void same_boundary(const DiagMorphism& o) const;
  Word dom_, cod_;
  Terms terms_;
};

// f ∘ g, with g applied first.  Closed loops become factors of delta.
DiagMorphism compose(const DiagMorphism& f, const DiagMorphism& g);
DiagMorphism tensor(const DiagMorphism& f, const DiagMorphism& g);
// Evaluates every coefficient at delta = value.
DiagMorphism specialize(const DiagMorphism& f, const Rational& value);

DiagMorphism identity(const Word& w);
DiagMorphism crossing(Letter x, Letter y);
// Block crossing v ⊗ w -> w ⊗ v.
DiagMorphism braiding(const Word& v, const Word& w);
DiagMorphism cap(const Word& two);
DiagMorphism cup(const Word& two);
// Nested cups 1 -> w w* and nested caps w* w -> 1.
DiagMorphism coevaluation(const Word& w);
DiagMorphism evaluation(const Word& w);
// Bottom i is joined to top sigma[i].
DiagMorphism permutation_diagram(const std::vector<int>& sigma, const Word& word);
DiagMorphism antisymmetrizer(int k, Letter letter = Letter::up);
// The closed loop as a scalar, i.e. delta.
DiagMorphism circle();
// Rotation f: v -> w  gives  f*: w* -> v*.
DiagMorphism dual_morphism(const DiagMorphism& f);
DiagMorphism power(const DiagMorphism& f, int n);

}  // namespace brauerlie
