#include "brauerlie/suites.hpp"

#include "brauerlie/current/current.hpp"
#include "brauerlie/diagram/parser.hpp"
#include "brauerlie/lie/lie.hpp"

namespace brauerlie {

std::vector<Word> oriented_words(std::size_t max_len) {
  std::vector<Word> out{Word()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (Letter l : {Letter::up, Letter::down}) {
      auto v = out[i].letters();
      v.push_back(l);
      out.emplace_back(v);
    }
  }
  return out;
}

Report lie_axioms_suite() {
  Report r;
  LiePtr gl = gl_object();
  LiePtr so = unoriented_so_object();
  r.merge(check_semigroup(semigroup_from_dual_pair()), "dual pair semigroup");
  r.merge(check_lie_axioms(*gl), "gl");
  r.merge(check_lie_axioms(*so), "so");
  KarMorphism eight = KarMorphism(kar_tensor(so->carrier, so->carrier), so->carrier,
                                  BlockMatrix({Word::parse("ss")}, {Word::parse("ssss")}, {so_eight_term_bracket()}));
  r.add_residual("so: bracket equals the eight-term identity", so->bracket - eight);
  r.merge(check_module(natural_module(gl)), "gl natural");
  r.merge(check_module(dual_natural_module(gl)), "gl dual natural");
  r.merge(check_module(adjoint_module(gl)), "gl adjoint");
  r.merge(check_module(adjoint_module(so)), "so adjoint");
  r.merge(check_module(unoriented_natural_module(so)), "so natural");
  for (const auto& w : oriented_words(4))
    if (!w.empty()) r.merge(check_module(canonical_module(gl, w)), "gl canonical " + w.str());
  return r;
}

Report current_construction_suite(int d) {
  LiePtr gl = gl_object();
  LieModule nat = natural_module(gl);
  Word u3 = Word::parse("uuu");
  std::vector<std::pair<std::string, CurrentPtr>> mods;
  auto ev = current_evaluation(Rational(2), nat);
  auto ev_dn = current_evaluation(Rational(-1, 3), dual_natural_module(gl));
  for (const auto& w : oriented_words(3))
    if (!w.empty()) mods.emplace_back("evaluation(2, " + w.str() + ")", current_evaluation(Rational(2), canonical_module(gl, w)));
  mods.emplace_back("evaluation(0, adjoint)", current_evaluation(Rational(0), adjoint_module(gl)));
  mods.emplace_back("induced(uuu, id + A3)",
                    current_induced(canonical_module(gl, u3), KarMorphism::plain(identity(u3) + antisymmetrizer(3))));
  mods.emplace_back("induced(ud, id - 2 cup∘cap)", current_induced(canonical_module(gl, Word::parse("ud")),
                                                                 KarMorphism::plain(parse_expr("id(ud) - 2 * (cup(ud) ; cap(ud))"))));
  for (int k = 1; k <= 3; ++k) mods.emplace_back("truncated(evaluation(2, u), " + std::to_string(k) + ")", current_truncated(ev, k));
  mods.emplace_back("truncated(evaluation(-1/3, d), 3)", current_truncated(ev_dn, 3));
  mods.emplace_back("extension(u, u, 2, action)", make_extension(ev, ev, Rational(2), nat.action, d));
  mods.emplace_back("extension(1_0, adjoint at 2, unitor)",
                    make_extension(current_evaluation(Rational(0), trivial_module(gl, KarObject::unit())),
                                   current_evaluation(Rational(2), adjoint_module(gl)), Rational(2),
                                   KarMorphism::identity(gl->carrier), d));
  mods.emplace_back("tensor(evaluation(2, u), evaluation(-1/3, d))", current_tensor(ev, ev_dn));
  mods.emplace_back("tensor(truncated k=2, evaluation(-1/3, d))", current_tensor(current_truncated(ev, 2), ev_dn));
  mods.emplace_back("dual(evaluation(2, u))", current_dual(ev));
  mods.emplace_back("dual(truncated k=2)", current_dual(current_truncated(ev, 2)));
  mods.emplace_back("trivial(ud)", current_trivial(gl, KarObject::of(Word::parse("ud"))));

  Report r;
  for (const auto& [name, m] : mods) {
    Report c = check_current_compatibility(*m, d);
    r.merge(c, name);
    r.merge(check_module(m->underlying()), name + " underlying");
  }
  auto t = current_truncated(ev, 2);
  auto vw = current_tensor(t, ev_dn), wv = current_tensor(ev_dn, t);
  r.merge(check_current_morphism(kar_braiding(t->carrier(), ev_dn->carrier()), *vw, *wv, d), "braiding");
  auto dual = current_dual(t);
  auto unit = current_trivial(gl, KarObject::unit());
  r.merge(check_current_morphism(kar_evaluation(t->carrier()), *current_tensor(dual, t), *unit, d), "cap");
  r.merge(check_current_morphism(kar_coevaluation(t->carrier()), *unit, *current_tensor(t, dual), d), "cup");
  return r;
}

}  // namespace brauerlie
