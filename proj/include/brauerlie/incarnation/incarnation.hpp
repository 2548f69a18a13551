#pragma once

#include <vector>

#include "brauerlie/envelope/karoubi.hpp"
#include "brauerlie/exactmath/matrix.hpp"
#include "brauerlie/report.hpp"

namespace brauerlie {

struct IncarnationConfig {
  int n = 2;
  Flavor flavor = Flavor::oriented;
};

std::vector<Matching> hom_basis(const Word& w1, const Word& w2);

// Coefficient vector of f over basis with delta evaluated; throws if f uses a
// matching outside the basis.
Vec<Rational> coordinates(const DiagMorphism& f, const std::vector<Matching>& basis, const Rational& delta);

// Matrix of the incarnation.  Rows are indexed by codomain multi-indices,
// columns by domain multi-indices, first letter most significant.
QMatrix incarnate(const DiagMorphism& f, const IncarnationConfig& cfg);
QMatrix incarnate(const KarMorphism& f, const IncarnationConfig& cfg);
QMatrix incarnate(const BlockMatrix& b, const IncarnationConfig& cfg);
QMatrix incarnate_matching(const Matching& m, std::size_t domain_size, std::size_t codomain_size, int n);

struct KernelResult {
  Word domain, codomain;
  int n = 0;
  std::vector<Matching> basis_diagrams;
  std::size_t rank = 0;
  std::vector<Vec<Rational>> basis;  // kernel vectors over basis_diagrams
  std::size_t hom_dimension() const { return basis_diagrams.size(); }
  std::size_t kernel_dimension() const { return basis.size(); }
  Json to_json() const;
};

// Kernel of the linear map Hom(w1, w2) -> matrices, columns flattened row-major.
KernelResult kernel_of_incarnation(const Word& w1, const Word& w2, const IncarnationConfig& cfg);
QMatrix incarnation_matrix(const std::vector<Matching>& basis, const Word& w1, const Word& w2, int n);

// For each k, compares ker I_n on End(u^k) with the span of π∘(A_{n+1} ⊗ id)∘π'.
Report antisymmetrizer_kernel_check(const IncarnationConfig& cfg, const std::vector<int>& ks);
Report so_object_image_check(int n);
// I_n(bracket)(X ⊗ Y) = XY − YX for the gl object on all matrix units.
Report gl_commutator_check(int n);

}  // namespace brauerlie
