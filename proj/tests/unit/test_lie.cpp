#include "brauerlie/diagram/parser.hpp"
#include "brauerlie/errors.hpp"
#include "brauerlie/lie/lie.hpp"
#include "doctest.h"

using namespace brauerlie;

namespace {

Word W(const char* s) { return Word::parse(s); }
KarMorphism K(const DiagMorphism& f) { return KarMorphism::plain(f); }
KarMorphism id(const KarObject& x) { return KarMorphism::identity(x); }

std::vector<Word> words_up_to(std::size_t n) {
  std::vector<Word> out{Word()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == n) continue;
    for (Letter l : {Letter::up, Letter::down}) {
      auto v = out[i].letters();
      v.push_back(l);
      out.emplace_back(v);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("dual pair semigroup") {
  auto s = semigroup_from_dual_pair();
  CHECK(check_semigroup(s).passed());
  KarObject ud = KarObject::of(W("ud"));
  auto left_unit = kar_compose(s.product, kar_tensor(K(cup(W("ud"))), id(ud)));
  auto right_unit = kar_compose(s.product, kar_tensor(id(ud), K(cup(W("ud")))));
  CHECK(left_unit == id(ud));
  CHECK(right_unit == id(ud));
  CHECK_THROWS_AS(semigroup_from_dual_pair(Flavor::unoriented), Error);
}

TEST_CASE("gl object and toys") {
  auto gl = gl_object();
  auto r = check_lie_axioms(*gl);
  CHECK(r.passed());
  CHECK(r.size() == 2);
  CHECK(r.to_json()[0]["status"] == "pass");

  // commutative product on the unit
  KarObject one = KarObject::unit();
  SemigroupObject toy{one, id(one)};
  auto toy_lie = lie_from_semigroup(toy, "toy");
  CHECK(toy_lie->bracket.is_zero());
  CHECK(check_lie_axioms(*toy_lie).passed());

  // the product alone is not skew
  auto s = semigroup_from_dual_pair();
  auto bad = make_lie_object("bad", s.carrier, s.product);
  auto rb = check_lie_axioms(*bad);
  CHECK_FALSE(rb.find("SKEW")->passed);
  CHECK(rb.find("SKEW")->residual.has_value());
  SemigroupObject jordan{s.carrier, s.product + kar_compose(s.product, kar_braiding(s.carrier, s.carrier))};
  CHECK_FALSE(check_semigroup(jordan).passed());
  CHECK_THROWS_AS(lie_from_semigroup(jordan), Error);
}

TEST_CASE("natural and dual natural modules") {
  auto gl = gl_object();
  auto nat = natural_module(gl), dual = dual_natural_module(gl);
  CHECK(check_module(nat).passed());
  CHECK(check_module(dual).passed());
  LieModule flipped{gl, dual.carrier, -dual.action};
  CHECK_FALSE(check_module(flipped).passed());
  CHECK(check_module(adjoint_module(gl)).passed());

  CHECK(dual_module(nat).action == dual.action);
  CHECK(dual_module(dual).action == nat.action);

  auto nd = tensor_module(nat, dual);
  CHECK(check_module(nd).passed());
  auto triv = trivial_module(gl, KarObject::unit());
  CHECK(check_module_morphism(K(cap(W("ud"))), nd, triv).passed());
  CHECK(check_module_morphism(K(cup(W("ud"))), triv, nd).passed());
  CHECK(check_module_morphism(K(cap(W("du"))), tensor_module(dual, nat), triv).passed());
  CHECK_THROWS_AS(check_module_morphism(K(cap(W("du"))), nd, triv), Error);

  auto nn = tensor_module(nat, nat);
  CHECK(check_module(nn).passed());
  auto x = K(crossing(Letter::up, Letter::up));
  CHECK(check_module_morphism(x, nn, nn).passed());
  // against an action that only sees the left factor the crossing is not equivariant
  auto left_only = tensor_module(nat, trivial_module(gl, KarObject::of(W("u"))));
  CHECK(check_module(left_only).passed());
  CHECK_FALSE(check_module_morphism(x, left_only, left_only).passed());

  auto padded = tensor_module(nat, trivial_module(gl, KarObject::unit()));
  CHECK(padded.action == nat.action);
  CHECK(tensor_module(nat, trivial_module(gl, KarObject::of(W("u")))).action == kar_tensor(nat.action, id(KarObject::of(W("u")))));
}

TEST_CASE("canonical modules") {
  auto gl = gl_object();
  CHECK(canonical_module(gl, W("u")).action == natural_module(gl).action);
  CHECK(canonical_module(gl, W("d")).action == dual_natural_module(gl).action);
  auto empty = canonical_module(gl, Word());
  CHECK(empty.action.is_zero());
  CHECK(check_module(empty).passed());
  CHECK_THROWS_AS(canonical_module(gl, W("ss")), Error);

  // ↑↓↑: L occupies bottom 0,1; the word bottom 2,3,4; top 5,6,7
  Word dom = W("ududu"), cod = W("udu");
  DiagMorphism expect = DiagMorphism::single(dom, cod, matching_from_pairs(8, {{0, 5}, {1, 2}, {3, 6}, {4, 7}})) +
                        DiagMorphism::single(dom, cod, matching_from_pairs(8, {{0, 3}, {1, 6}, {2, 5}, {4, 7}}), DeltaPoly(-1)) +
                        DiagMorphism::single(dom, cod, matching_from_pairs(8, {{0, 7}, {1, 4}, {2, 5}, {3, 6}}));
  auto udu = canonical_module(gl, cod);
  CHECK(udu.action.block(0, 0) == expect);
  CHECK(udu.action.block(0, 0).terms().size() == 3);

  for (const Word& w : words_up_to(4)) {
    auto m = canonical_module(gl, w);
    CHECK(check_module(m).passed());
    for (std::size_t k = 0; k <= w.size(); ++k) {
      auto t = tensor_module(canonical_module(gl, w.sub(0, k)), canonical_module(gl, w.sub(k, w.size() - k)));
      CHECK(t.action == m.action);
    }
    if (w.size() <= 3) {
      auto pair = tensor_module(canonical_module(gl, w.dual()), m);
      CHECK(check_module_morphism(K(evaluation(w)), pair, trivial_module(gl, KarObject::unit())).passed());
      auto copair = tensor_module(m, canonical_module(gl, w.dual()));
      CHECK(check_module_morphism(K(coevaluation(w)), trivial_module(gl, KarObject::unit()), copair).passed());
      CHECK(dual_module(m).action == canonical_module(gl, w.dual()).action);
    }
  }
}

TEST_CASE("unoriented so object") {
  auto so = unoriented_so_object();
  const auto& e = so->carrier.idempotent().at(0, 0);
  CHECK(compose(e, e) == e);
  CHECK(check_lie_axioms(*so).passed());
  DiagMorphism m = so_product();
  DiagMorphism sigma = braiding(W("ss"), W("ss"));
  DiagMorphism expected = compose(compose(e, m - compose(m, sigma)), tensor(e, e));
  CHECK(so_eight_term_bracket() == expected);
  CHECK(so_eight_term_bracket().terms().size() == 8);

  auto v = unoriented_natural_module(so);
  CHECK(check_module(v).passed());
  DiagMorphism act = tensor(identity(W("s")), cap(W("ss")));
  CHECK(v.action.block(0, 0) == compose(act, tensor(e, identity(W("s")))));
  auto vv = tensor_module(v, v);
  CHECK(check_module(vv).passed());
  CHECK(check_module_morphism(K(cap(W("ss"))), vv, trivial_module(so, KarObject::unit())).passed());
  CHECK(check_module(adjoint_module(so)).passed());
  CHECK_THROWS_AS(natural_module(so), Error);
}
