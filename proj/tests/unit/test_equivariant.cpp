#include <fstream>

#include "brauerlie/equivariant/description.hpp"
#include "brauerlie/errors.hpp"
#include "doctest.h"

using namespace brauerlie;

namespace {

CycloNumber C(long v) { return CycloNumber(Rational(v)); }

CMatrix diag(const std::vector<CycloNumber>& d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix chevalley() { return CMatrix::from_rows({{C(0), C(0), C(1)}, {C(0), C(-1), C(0)}, {C(1), C(0), C(0)}}); }

GroupActionOnSpace z2(const CMatrix& m) { return {FiniteAbelianGroup({2}), {m}}; }

CVec e(std::size_t n, std::size_t i) {
  CVec v(n, C(0));
  v[i] = C(1);
  return v;
}

Json load(const char* file) {
  std::ifstream in(std::string(BRAUERLIE_DATA_DIR) + "/" + file);
  REQUIRE(in);
  return Json::parse(in);
}

// Fixed vectors of the diagonal action, straight from ker(ρ(gen) − 1) for each generator.
std::size_t fixed_dimension_oracle(const GroupActionOnSpace& ga, const GroupActionOnSpace& aa, std::size_t n) {
  std::vector<CVec> rows;
  for (std::size_t s = 0; s < ga.generators.size(); ++s) {
    CMatrix k = kron(ga.generators[s], aa.generators[s]) - CMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      CVec r;
      for (std::size_t j = 0; j < n; ++j) r.push_back(k(i, j));
      rows.push_back(r);
    }
  }
  if (rows.empty()) return n;
  return n - rank(CMatrix::from_rows(rows));
}

std::vector<CMatrix> natural_sl2(long sign) {
  CMatrix E = CMatrix::from_rows({{C(0), C(sign)}, {C(0), C(0)}});
  CMatrix H = CMatrix::from_rows({{C(sign), C(0)}, {C(0), C(-sign)}});
  CMatrix F = CMatrix::from_rows({{C(0), C(0)}, {C(sign), C(0)}});
  return {E, H, F};
}

}  // namespace

TEST_CASE("groups and characters") {
  FiniteAbelianGroup g({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  CHECK(g.elements().size() == 8);
  CHECK(g.element_order({1, 2}) == 2);
  CHECK(g.element_order({0, 1}) == 4);
  CHECK(FiniteAbelianGroup().order() == 1);
  CHECK(FiniteAbelianGroup().exponent() == 1);
  CHECK_THROWS_AS(FiniteAbelianGroup({1}), Error);
  auto chars = characters(g);
  CHECK(chars.size() == 8);
  // orthogonality of the character table
  for (const auto& a : chars)
    for (const auto& b : chars) {
      CycloNumber s(0);
      for (const auto& x : g.elements()) s += a.value(g, x) * b.value(g, x).inverse();
      CHECK(s * CycloNumber(Rational(1, 8)) == CycloNumber(a == b ? 1 : 0));
      auto ab = character_product(g, a, b);
      for (const auto& x : g.elements()) CHECK(ab.value(g, x) == a.value(g, x) * b.value(g, x));
    }
  Character c{{1, 3}};
  CHECK(character_product(g, c, character_inverse(g, c)).is_trivial());
  CHECK(c.value(g, {0, 1}) == CycloNumber::root_of_unity(4, 3));
}

TEST_CASE("algebras") {
  auto a = truncated_polynomial_algebra(4);
  CHECK(a.validate().passed());
  CHECK(a.mul(e(4, 1), e(4, 3)) == CVec(4, C(0)));
  CHECK(a.mul(e(4, 1), e(4, 2)) == e(4, 3));
  auto q = quotient_algebra({Rational(-1), Rational(0), Rational(1)});  // t^2 = 1
  CHECK(q.mul(e(2, 1), e(2, 1)) == e(2, 0));
  CHECK(sl2().validate().passed());
  auto bad = sl2();
  bad.c[0][2][1] = C(2);  // [e,f] = 2h, [f,e] = -h
  CHECK(!bad.validate().passed());
  CHECK_THROWS_AS(quotient_algebra({Rational(1), Rational(2)}), Error);
}

TEST_CASE("isotypic projectors") {
  auto t4 = z2(diag({C(1), C(-1), C(1), C(-1)}));
  CHECK(t4.validate().passed());
  CHECK(check_isotypic_decomposition(t4).passed());
  auto even = isotypic_basis(t4, Character{{0}});
  auto odd = isotypic_basis(t4, Character{{1}});
  CHECK(even.size() == 2);
  CHECK(odd.size() == 2);
  CHECK(even[0] == e(4, 0));
  CHECK(even[1] == e(4, 2));
  CHECK(odd[0] == e(4, 1));
  CHECK(isotypic_basis(z2(chevalley()), Character{{0}}).size() == 1);
  CHECK(isotypic_basis(z2(chevalley()), Character{{1}}).size() == 2);
  GroupActionOnSpace triv{FiniteAbelianGroup(), {}};
  CHECK(triv.group.order() == 1);
  // Z4 with i on a 2-dim space: projectors still orthogonal and complete
  auto i = CycloNumber::root_of_unity(4, 1);
  GroupActionOnSpace z4{FiniteAbelianGroup({4}), {diag({i, -i})}};
  CHECK(check_isotypic_decomposition(z4).passed());
  CHECK(isotypic_projector(z4, Character{{1}}) == diag({C(1), C(0)}));
  // wrong order
  CHECK(!z2(diag({i, C(1)})).validate().passed());
}

TEST_CASE("automorphism validation") {
  auto g = sl2();
  CHECK(check_automorphisms(z2(chevalley()), g).passed());
  auto notaut = z2(diag({C(1), C(1), C(-1)}));
  CHECK(!check_automorphisms(notaut, g).passed());
  auto a = truncated_polynomial_algebra(4);
  CHECK(check_automorphisms(z2(diag({C(1), C(-1), C(1), C(-1)})), a).passed());
  CHECK(!check_automorphisms(z2(diag({C(-1), C(1), C(1), C(1)})), a).passed());
  try {
    equivariant_map_algebra(g, a, notaut, z2(diag({C(1), C(-1), C(1), C(-1)})));
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::validation);
  }
}

TEST_CASE("equivariant map algebras") {
  auto g = sl2();
  auto a = truncated_polynomial_algebra(4);
  // trivial group: the whole current algebra
  auto full = equivariant_map_algebra(g, a, {FiniteAbelianGroup(), {}}, {FiniteAbelianGroup(), {}});
  CHECK(full.dimension() == 12);
  CHECK(full.report.passed());

  auto ga = z2(chevalley()), aa = z2(diag({C(1), C(-1), C(1), C(-1)}));
  auto ema = equivariant_map_algebra(g, a, ga, aa);
  CHECK(ema.dimension() == 6);
  CHECK(ema.fixed_rank == 6);
  CHECK(fixed_dimension_oracle(ga, aa, 12) == 6);
  CHECK(ema.report.passed());
  REQUIRE(ema.pieces.size() == 2);
  CHECK(ema.pieces[0].g_basis.size() * ema.pieces[0].a_basis.size() == 2);
  CHECK(ema.pieces[1].g_basis.size() * ema.pieces[1].a_basis.size() == 4);
  // every basis vector is fixed
  CMatrix d = kron(ga.generators[0], aa.generators[0]);
  for (const auto& v : ema.basis) CHECK(d * v == v);
  // structure constants reproduce the bracket
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      CVec s(12, C(0));
      for (std::size_t k = 0; k < 6; ++k)
        for (std::size_t r = 0; r < 12; ++r) s[r] += ema.structure[i][j][k] * ema.basis[k][r];
      CHECK(s == tensor_bracket(g, a, ema.basis[i], ema.basis[j]));
    }
}

TEST_CASE("ideals and stabilizers") {
  auto a = truncated_polynomial_algebra(4);
  auto m = make_max_ideal(a, {e(4, 1), e(4, 2), e(4, 3)});
  CHECK(m.ev == e(4, 0));
  auto flip = z2(diag({C(1), C(-1), C(1), C(-1)}));
  auto st = ideal_stabilizer(a, flip, m);
  CHECK(st.elements.size() == 2);
  CHECK(st.invariants == std::vector<unsigned>{2});

  GroupActionOnSpace triv{FiniteAbelianGroup({2, 6}), {CMatrix::identity(4), CMatrix::identity(4)}};
  auto all = ideal_stabilizer(a, triv, m);
  CHECK(all.elements.size() == 12);
  CHECK(all.invariants == std::vector<unsigned>{2, 6});

  auto q = quotient_algebra({Rational(-1), Rational(0), Rational(1)});
  CVec tm1{C(-1), C(1)};
  auto mq = make_max_ideal(q, {tm1});
  CHECK(mq.ev == CVec{C(1), C(1)});
  auto st2 = ideal_stabilizer(q, z2(diag({C(1), C(-1)})), mq);
  CHECK(st2.elements.size() == 1);
  CHECK(st2.invariants.empty());

  CHECK_THROWS_AS(make_max_ideal(a, {e(4, 1), e(4, 2)}), Error);
  CHECK_THROWS_AS(make_max_ideal(a, {e(4, 0), e(4, 2), e(4, 3)}), Error);  // not closed
  // A^2 inside m: t^2 = 0 algebra with m = <1>... use the nilpotent algebra of dim 2
  FDAlgebra nil;
  nil.dim = 2;
  nil.c.assign(2, std::vector<CVec>(2, CVec(2, C(0))));
  CHECK_THROWS_AS(make_max_ideal(nil, {e(2, 1)}), Error);
}

TEST_CASE("twisted characters evaluate to zero") {
  auto a = truncated_polynomial_algebra(4);
  auto m = make_max_ideal(a, {e(4, 1), e(4, 2), e(4, 3)});
  auto flip = z2(diag({C(1), C(-1), C(1), C(-1)}));
  CHECK(twisted_evaluation_zero_check(a, flip, m, Character{{1}}).passed());
  CHECK_THROWS_AS(twisted_evaluation_zero_check(a, flip, m, Character{{0}}), Error);

  auto i = CycloNumber::root_of_unity(4, 1);
  GroupActionOnSpace rot{FiniteAbelianGroup({4}), {diag({C(1), i, i * i, i * i * i})}};
  CHECK(check_automorphisms(rot, a).passed());
  for (unsigned k = 1; k < 4; ++k) CHECK(twisted_evaluation_zero_check(a, rot, m, Character{{k}}).passed());

  // a stabilizer-trivial ideal makes every character trivial on it
  auto q = quotient_algebra({Rational(-1), Rational(0), Rational(1)});
  auto mq = make_max_ideal(q, {CVec{C(-1), C(1)}});
  try {
    twisted_evaluation_zero_check(q, z2(diag({C(1), C(-1)})), mq, Character{{1}});
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::precondition);
  }
}

TEST_CASE("equivariant evaluation modules") {
  auto g = sl2();
  auto a = truncated_polynomial_algebra(4);
  auto m = make_max_ideal(a, {e(4, 1), e(4, 2), e(4, 3)});

  // trivial group: plain evaluation module, x ⊗ t^k acts as δ_k0 x
  auto full = equivariant_map_algebra(g, a, {FiniteAbelianGroup(), {}}, {FiniteAbelianGroup(), {}});
  auto mod = equivariant_evaluation_module(full, m, natural_sl2(1));
  CHECK(mod.report.passed());
  for (std::size_t k = 0; k < full.dimension(); ++k) {
    const auto& [x, f] = full.factors[k];
    bool constant = f == e(4, 0);
    CHECK(mod.actions[k].is_zero() == !constant);
  }
  CHECK_THROWS_AS(equivariant_evaluation_module(full, m, natural_sl2(-1)), Error);
  auto off = equivariant_evaluation_module(full, m, natural_sl2(-1), false);
  CHECK(!off.report.passed());
  CHECK(!off.report.find("V is a g_m-module")->passed);

  auto ema = equivariant_map_algebra(g, a, z2(chevalley()), z2(diag({C(1), C(-1), C(1), C(-1)})));
  std::vector<CMatrix> rho{CMatrix::from_rows({{C(2)}}), CMatrix::from_rows({{C(0)}}), CMatrix::from_rows({{C(2)}})};
  auto ev = equivariant_evaluation_module(ema, m, rho);
  CHECK(ev.report.passed());
  CHECK(ev.allowed.size() == 1);
  CHECK(ev.dim == 1);
  // only (e+f) ⊗ 1 acts
  std::size_t nonzero = 0;
  for (const auto& x : ev.actions) nonzero += !x.is_zero();
  CHECK(nonzero == 1);
  CHECK_THROWS_AS(equivariant_evaluation_module(ema, m, {rho[0]}), Error);
}

TEST_CASE("bundled data") {
  for (const char* f : {"sl2_chevalley_t4.json", "sl2_z4_gaussian_t4.json"}) {
    INFO(f);
    auto p = equivariant_from_json(load(f));
    auto r = run_equivariant_suite(p);
    CHECK(r.report.passed());
    CHECK(r.summary["passed"] == true);
  }
  auto r = run_equivariant_suite(equivariant_from_json(load("sl2_chevalley_t4.json")));
  CHECK(r.summary["map_algebra"]["dimension"] == 6);
  CHECK(r.summary["stabilizer"]["invariants"] == Json::array({2}));
  auto z4 = run_equivariant_suite(equivariant_from_json(load("sl2_z4_gaussian_t4.json")));
  CHECK(z4.summary["map_algebra"]["dimension"] == 3);

  Json j = load("sl2_chevalley_t4.json");
  j["group"] = Json::array({1});
  CHECK_THROWS_AS(equivariant_from_json(j), Error);
  j = load("sl2_chevalley_t4.json");
  j["lie_action"] = Json::array();
  CHECK_THROWS_AS(equivariant_from_json(j), Error);
  j = load("sl2_chevalley_t4.json");
  j["module"]["matrices"][0] = Json::array({Json::array({"x"})});
  CHECK_THROWS_AS(equivariant_from_json(j), Error);
}

TEST_CASE("trivial action stabilizes everything") {
  auto a = truncated_polynomial_algebra(3);
  auto m = make_max_ideal(a, {e(3, 1), e(3, 2)});
  auto st = ideal_stabilizer(a, {FiniteAbelianGroup(), {}}, m);
  CHECK(st.elements.size() == 1);
  CHECK(st.invariants.empty());
}
