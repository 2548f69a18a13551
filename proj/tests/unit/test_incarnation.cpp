#include <algorithm>
#include <random>

#include "brauerlie/diagram/parser.hpp"
#include "brauerlie/errors.hpp"
#include "brauerlie/incarnation/incarnation.hpp"
#include "brauerlie/lie/lie.hpp"
#include "doctest.h"
#include "../support/random_diagrams.hpp"

using namespace brauerlie;

namespace {

Word W(const char* s) { return Word::parse(s); }
IncarnationConfig O(int n) { return {n, Flavor::oriented}; }
IncarnationConfig U(int n) { return {n, Flavor::unoriented}; }

// Brute force: every index assignment to every point, keep those constant on pairs.
QMatrix oracle_matching(const Matching& m, std::size_t k, std::size_t l, int n) {
  std::size_t pts = k + l, total = 1;
  for (std::size_t i = 0; i < pts; ++i) total *= n;
  std::size_t rows = 1, cols = 1;
  for (std::size_t i = 0; i < l; ++i) rows *= n;
  for (std::size_t i = 0; i < k; ++i) cols *= n;
  QMatrix out(rows, cols);
  std::vector<int> idx(pts);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = pts; i-- > 0;) { idx[i] = c % n; c /= n; }
    bool ok = true;
    for (std::size_t p = 0; p < pts; ++p) ok = ok && idx[p] == idx[m.partner[p]];
    if (!ok) continue;
    std::size_t r = 0, col = 0;
    for (std::size_t i = 0; i < k; ++i) col = col * n + idx[i];
    for (std::size_t j = 0; j < l; ++j) r = r * n + idx[k + j];
    out(r, col) = Rational(1);
  }
  return out;
}

}  // namespace

TEST_CASE("hom basis sizes") {
  CHECK(hom_basis(W("uuu"), W("uuu")).size() == 6);
  CHECK(hom_basis(W("ud"), W("ud")).size() == 2);
  CHECK(hom_basis(W("ssss"), W("")).size() == 3);
  CHECK(hom_basis(W("ss"), W("ss")).size() == 3);
  CHECK(hom_basis(W("uu"), W("")).empty());
}

TEST_CASE("basic incarnations") {
  CHECK(incarnate(circle(), O(3)) == QMatrix::from_rows({{Rational(3)}}));
  CHECK(incarnate(identity(W("uu")), O(2)) == QMatrix::identity(4));
  CHECK(incarnate(antisymmetrizer(2), O(1)).is_zero());
  CHECK(!incarnate(antisymmetrizer(2), O(2)).is_zero());
  CHECK(incarnate(antisymmetrizer(3), O(2)).is_zero());
  CHECK(!incarnate(antisymmetrizer(3), O(3)).is_zero());
  // crossing on V⊗V is the swap
  QMatrix sw = incarnate(crossing(Letter::up, Letter::up), O(2));
  CHECK(sw(1, 2) == Rational(1));
  CHECK(sw(2, 1) == Rational(1));
  CHECK(sw(0, 0) == Rational(1));
  CHECK(sw(1, 1) == Rational(0));
  // cap on u d is the trace pairing
  QMatrix c = incarnate(cap(W("ud")), O(3));
  CHECK(c.rows() == 1);
  CHECK(c.cols() == 9);
  CHECK(c(0, 0) == Rational(1));
  CHECK(c(0, 4) == Rational(1));
  CHECK(c(0, 1) == Rational(0));
  CHECK_THROWS_AS(incarnate(identity(W("ss")), O(2)), Error);
  CHECK_THROWS_AS(incarnate(circle(), O(0)), Error);
}

TEST_CASE("matching incarnation against brute force") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 3; ++n)
    for (const char* a : {"uud", "ud", "uu", "s", "sss"})
      for (const char* b : {"u", "uudd", "ssss", "s", "du"}) {
        Word w1 = W(a), w2 = W(b);
        if (w1.flavor() != w2.flavor()) continue;
        for (const auto& m : hom_basis(w1, w2))
          CHECK(incarnate_matching(m, w1.size(), w2.size(), n) == oracle_matching(m, w1.size(), w2.size(), n));
      }
}

TEST_CASE("functoriality") {
  std::mt19937 rng(11);
  for (int it = 0; it < 60; ++it) {
    Word a = testing::random_word(rng, 3), b = testing::random_codomain(rng, a, 1),
         c = testing::random_codomain(rng, b, 1);
    if (a.size() + b.size() > 6 || b.size() + c.size() > 6) continue;
    int n = 1 + it % 3;
    DiagMorphism g = testing::random_morphism(rng, a, b), f = testing::random_morphism(rng, b, c);
    CHECK(incarnate(compose(f, g), O(n)) == incarnate(f, O(n)) * incarnate(g, O(n)));
    CHECK(incarnate(tensor(f, g), O(n)) == kron(incarnate(f, O(n)), incarnate(g, O(n))));
  }
}

TEST_CASE("relations are sound") {
  for (int n = 1; n <= 3; ++n) {
    Rational d(n);
    CHECK(incarnate(compose(cap(W("ud")), cup(W("ud"))), O(n)) == QMatrix::from_rows({{d}}));
    CHECK(incarnate(compose(tensor(identity(W("u")), cap(W("du"))), tensor(cup(W("ud")), identity(W("u")))), O(n)) ==
          QMatrix::identity(n));
    auto x = crossing(Letter::up, Letter::up);
    CHECK(incarnate(compose(x, x), O(n)) == QMatrix::identity(n * n));
  }
}

TEST_CASE("kernel dimensions") {
  auto k4 = kernel_of_incarnation(W("uuuu"), W("uuuu"), O(2));
  CHECK(k4.hom_dimension() == 24);
  CHECK(k4.rank == 14);
  CHECK(k4.kernel_dimension() == 10);
  CHECK(kernel_of_incarnation(W("uuu"), W("uuu"), O(2)).kernel_dimension() == 1);
  CHECK(kernel_of_incarnation(W("u"), W("u"), O(3)).kernel_dimension() == 0);
  CHECK(kernel_of_incarnation(W("ud"), W("ud"), O(1)).kernel_dimension() == 1);
  // Brauer algebra B_2(n) is faithful for n >= 2
  CHECK(kernel_of_incarnation(W("ss"), W("ss"), U(2)).kernel_dimension() == 0);
  CHECK_THROWS_AS(kernel_of_incarnation(W("ss"), W("ss"), O(2)), Error);
  // every kernel vector really maps to zero
  QMatrix m = incarnation_matrix(k4.basis_diagrams, W("uuuu"), W("uuuu"), 2);
  for (const auto& v : k4.basis) {
    auto img = m * v;
    CHECK(std::all_of(img.begin(), img.end(), [](const Rational& x) { return x.is_zero(); }));
  }
  auto j = k4.to_json();
  CHECK(j["kernel_dimension"] == 10);
  CHECK(j["basis"].size() == 10);
}

TEST_CASE("antisymmetrizer generates the kernel") {
  auto r = antisymmetrizer_kernel_check(O(2), {3, 4});
  CHECK(r.passed());
  auto r1 = antisymmetrizer_kernel_check(O(1), {2, 3});
  CHECK(r1.passed());
  CHECK_THROWS_AS(antisymmetrizer_kernel_check(U(2), {3}), Error);
}

TEST_CASE("so and gl images") {
  for (int n = 2; n <= 4; ++n) {
    auto r = so_object_image_check(n);
    CHECK(r.passed());
    auto e = incarnate(unoriented_so_object()->carrier.idempotent().at(0, 0), U(n));
    CHECK(rank(e) == static_cast<std::size_t>(n * (n - 1) / 2));
  }
  CHECK_THROWS_AS(so_object_image_check(1), Error);
  for (int n = 1; n <= 3; ++n) CHECK(gl_commutator_check(n).passed());
}

TEST_CASE("karoubi incarnation is block diagonal for direct sums") {
  auto x = KarObject::of(W("u"));
  auto y = KarObject::of(W("uu"));
  auto s = kar_direct_sum({x, y});
  QMatrix m = incarnate(KarMorphism::identity(s), O(2));
  CHECK(m == QMatrix::identity(6));
}
