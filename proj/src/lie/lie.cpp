#include "brauerlie/lie/lie.hpp"

#include "brauerlie/errors.hpp"

namespace brauerlie {
namespace {

KarMorphism id(const KarObject& x) { return KarMorphism::identity(x); }

Word W(const char* s) { return Word::parse(s); }

void require_action_shape(const LieObject& lie, const KarObject& carrier, const KarMorphism& act) {
  if (!(act.source() == kar_tensor(lie.carrier, carrier)) || !(act.target() == carrier))
    throw Error(Errc::boundary, "action must map L ⊗ V to V");
}

}  // namespace

LiePtr make_lie_object(std::string name, KarObject carrier, KarMorphism bracket) {
  if (!(bracket.source() == kar_tensor(carrier, carrier)) || !(bracket.target() == carrier))
    throw Error(Errc::boundary, "bracket must map L ⊗ L to L");
  return std::make_shared<const LieObject>(LieObject{std::move(name), std::move(carrier), std::move(bracket)});
}

LieModule make_module(LiePtr lie, KarObject carrier, KarMorphism action) {
  require_action_shape(*lie, carrier, action);
  return LieModule{std::move(lie), std::move(carrier), std::move(action)};
}

SemigroupObject semigroup_from_dual_pair(Flavor flavor) {
  if (flavor != Flavor::oriented) throw Error(Errc::flavor, "the dual-pair semigroup lives on the oriented word ud");
  DiagMorphism m = tensor(tensor(identity(W("u")), cap(W("du"))), identity(W("d")));
  KarObject c = KarObject::of(W("ud"));
  return {c, KarMorphism(kar_tensor(c, c), c, BlockMatrix({W("ud")}, {W("udud")}, {m}))};
}

Report check_semigroup(const SemigroupObject& s) {
  Report r;
  const auto& m = s.product;
  r.add_residual("ASSOC", kar_compose(m, kar_tensor(m, id(s.carrier))) - kar_compose(m, kar_tensor(id(s.carrier), m)));
  return r;
}

LiePtr lie_from_semigroup(const SemigroupObject& s, std::string name) {
  if (!check_semigroup(s).passed()) throw Error(Errc::validation, "product is not associative");
  KarMorphism br = s.product - kar_compose(s.product, kar_braiding(s.carrier, s.carrier));
  LiePtr lie = make_lie_object(std::move(name), s.carrier, br);
  if (!check_lie_axioms(*lie).passed()) throw Error(Errc::validation, "Lie axioms failed for the commutator bracket");
  return lie;
}

LiePtr gl_object() {
  static const LiePtr gl = lie_from_semigroup(semigroup_from_dual_pair(), "gl");
  return gl;
}

KarMorphism compatibility_residual(const LieObject& lie, const KarObject& carrier, const KarMorphism& act_m, const KarMorphism& act_n,
                                   const KarMorphism& act_mn) {
  const KarObject& l = lie.carrier;
  KarMorphism lhs = kar_compose(act_m, kar_tensor(id(l), act_n));
  KarMorphism t1 = kar_compose(act_mn, kar_tensor(lie.bracket, id(carrier)));
  KarMorphism t2 = kar_compose(kar_compose(act_n, kar_tensor(id(l), act_m)), kar_tensor(kar_braiding(l, l), id(carrier)));
  return lhs - t1 - t2;
}

Report check_lie_axioms(const LieObject& lie) {
  Report r;
  const KarObject& l = lie.carrier;
  const KarMorphism& br = lie.bracket;
  r.add_residual("SKEW", kar_compose(br, kar_braiding(l, l)) + br);
  r.add_residual("JACOBI", compatibility_residual(lie, l, br, br, br));
  return r;
}

Report check_module(const LieModule& m) {
  Report r;
  require_action_shape(*m.lie, m.carrier, m.action);
  r.add_residual("LMOD", compatibility_residual(*m.lie, m.carrier, m.action, m.action, m.action));
  return r;
}

Report check_module_morphism(const KarMorphism& f, const LieModule& m, const LieModule& n) {
  if (!(f.source() == m.carrier) || !(f.target() == n.carrier)) throw Error(Errc::boundary, "morphism boundary does not match the modules");
  if (m.lie != n.lie && !(m.lie->bracket == n.lie->bracket)) throw Error(Errc::invalid_argument, "modules over different Lie objects");
  Report r;
  r.add_residual("MORPHISM", kar_compose(f, m.action) - kar_compose(n.action, kar_tensor(id(m.lie->carrier), f)));
  return r;
}

LieModule adjoint_module(const LiePtr& lie) { return LieModule{lie, lie->carrier, lie->bracket}; }

LieModule trivial_module(const LiePtr& lie, const KarObject& carrier) {
  return LieModule{lie, carrier, KarMorphism::zero(kar_tensor(lie->carrier, carrier), carrier)};
}

namespace {

void require_gl(const LiePtr& gl) {
  if (gl->carrier.summands() != std::vector<Word>{W("ud")} || !gl->carrier.is_plain())
    throw Error(Errc::invalid_argument, "natural modules need the gl object on ud");
}

}  // namespace

LieModule natural_module(const LiePtr& gl) {
  require_gl(gl);
  DiagMorphism act = tensor(identity(W("u")), cap(W("du")));
  return make_module(gl, KarObject::of(W("u")), KarMorphism::plain(act));
}

LieModule dual_natural_module(const LiePtr& gl) {
  require_gl(gl);
  // cap joining the ↑ of L with the module strand, the ↓ of L passing through, negated
  DiagMorphism act = DiagMorphism::single(W("udd"), W("d"), matching_from_pairs(4, {{0, 2}, {1, 3}}), DeltaPoly(-1));
  return make_module(gl, KarObject::of(W("d")), KarMorphism::plain(act));
}

KarMorphism tensor_action(const KarObject& l, const KarMorphism& act_m, const KarObject& m, const KarMorphism& act_n, const KarObject& n) {
  KarMorphism left = kar_tensor(act_m, id(n));
  KarMorphism right = kar_compose(kar_tensor(id(m), act_n), kar_tensor(kar_braiding(l, m), id(n)));
  return left + right;
}

KarMorphism dual_action(const KarObject& l, const KarMorphism& act, const KarObject& m) {
  KarObject md = kar_dual(m);
  KarMorphism step = kar_tensor(id(kar_tensor(l, md)), kar_coevaluation(m));
  step = kar_compose(kar_tensor(kar_braiding(l, md), id(kar_tensor(m, md))), step);
  step = kar_compose(kar_tensor(kar_tensor(id(md), act), id(md)), step);
  step = kar_compose(kar_tensor(kar_evaluation(m), id(md)), step);
  return -step;
}

LieModule tensor_module(const LieModule& m, const LieModule& n) {
  if (m.lie != n.lie && !(m.lie->bracket == n.lie->bracket)) throw Error(Errc::invalid_argument, "modules over different Lie objects");
  return LieModule{m.lie, kar_tensor(m.carrier, n.carrier), tensor_action(m.lie->carrier, m.action, m.carrier, n.action, n.carrier)};
}

LieModule dual_module(const LieModule& m) { return LieModule{m.lie, kar_dual(m.carrier), dual_action(m.lie->carrier, m.action, m.carrier)}; }

LieModule canonical_module(const LiePtr& gl, const Word& word) {
  if (word.flavor() && *word.flavor() != Flavor::oriented) throw Error(Errc::flavor, "canonical modules need an oriented word");
  KarObject carrier = KarObject::of(word);
  const KarObject& l = gl->carrier;
  KarMorphism act = KarMorphism::zero(kar_tensor(l, carrier), carrier);
  if (word.empty()) return LieModule{gl, carrier, act};
  LieModule up = natural_module(gl), down = dual_natural_module(gl);
  for (std::size_t i = 0; i < word.size(); ++i) {
    KarObject before = KarObject::of(word.sub(0, i)), after = KarObject::of(word.sub(i + 1, word.size() - i - 1));
    KarObject rest = KarObject::of(word.sub(i, word.size() - i));
    const KarMorphism& single = word[i] == Letter::up ? up.action : down.action;
    KarMorphism transport = kar_tensor(kar_braiding(l, before), id(rest));
    act += kar_compose(kar_tensor(kar_tensor(id(before), single), id(after)), transport);
  }
  return LieModule{gl, carrier, act};
}

DiagMorphism so_product() { return tensor(tensor(identity(W("s")), cap(W("ss"))), identity(W("s"))); }

DiagMorphism so_eight_term_bracket() {
  // bottom points 0..3, top points 4, 5
  const std::vector<std::pair<int, std::vector<std::pair<int, int>>>> terms = {
      {+1, {{0, 4}, {1, 2}, {3, 5}}}, {-1, {{2, 4}, {0, 3}, {1, 5}}}, {-1, {{0, 4}, {1, 3}, {2, 5}}},
      {+1, {{0, 2}, {3, 4}, {1, 5}}}, {-1, {{0, 2}, {1, 4}, {3, 5}}}, {+1, {{1, 3}, {2, 4}, {0, 5}}},
      {+1, {{0, 3}, {1, 4}, {2, 5}}}, {-1, {{1, 2}, {3, 4}, {0, 5}}},
  };
  DiagMorphism b(W("ssss"), W("ss"));
  for (const auto& [sign, pairs] : terms)
    b += DiagMorphism::single(W("ssss"), W("ss"), matching_from_pairs(6, pairs), DeltaPoly(Rational(sign, 4)));
  return b;
}

LiePtr unoriented_so_object() {
  static const LiePtr so = [] {
    DiagMorphism e = DeltaPoly(Rational(1, 2)) * (identity(W("ss")) - crossing(Letter::strand, Letter::strand));
    KarObject l = kar_object({W("ss")}, BlockMatrix({W("ss")}, {W("ss")}, {e}));
    KarObject ll = kar_tensor(l, l);
    KarMorphism br(ll, l, BlockMatrix({W("ss")}, {W("ssss")}, {so_eight_term_bracket()}));
    return make_lie_object("so", l, br);
  }();
  return so;
}

LieModule unoriented_natural_module(const LiePtr& so) {
  KarObject v = KarObject::of(W("s"));
  DiagMorphism act = DiagMorphism::single(W("sss"), W("s"), matching_from_pairs(4, {{0, 3}, {1, 2}}));
  DiagMorphism reflected = DiagMorphism::single(W("sss"), W("s"), matching_from_pairs(4, {{0, 2}, {1, 3}}));
  DiagMorphism a = DeltaPoly(Rational(1, 2)) * (act - reflected);
  return make_module(so, v, KarMorphism(kar_tensor(so->carrier, v), v, BlockMatrix({W("s")}, {W("sss")}, {a})));
}

}  // namespace brauerlie
