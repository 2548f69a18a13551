#include "brauerlie/current/current.hpp"

#include <tuple>

#include "brauerlie/errors.hpp"
#include "brauerlie/incarnation/incarnation.hpp"
#include "brauerlie/parallel.hpp"

namespace brauerlie {
namespace {

KarMorphism id(const KarObject& x) { return KarMorphism::identity(x); }

KarMorphism zero_action(const LiePtr& lie, const KarObject& carrier) {
  return KarMorphism::zero(kar_tensor(lie->carrier, carrier), carrier);
}

KarMorphism kar_power(const KarMorphism& f, int n) {
  KarMorphism r = id(f.source());
  for (int i = 0; i < n; ++i) r = kar_compose(f, r);
  return r;
}

// incl_i ∘ f ∘ (id_L ⊗ proj_j) for a direct-sum carrier.
KarMorphism place(const LiePtr& lie, const std::vector<KarObject>& parts, std::size_t i, std::size_t j, const KarMorphism& f) {
  return kar_compose(kar_compose(kar_inclusion(parts, i), f), kar_tensor(id(lie->carrier), kar_projection(parts, j)));
}

void same_lie(const CurrentPtr& a, const CurrentPtr& b) {
  if (a->lie() != b->lie() && !(a->lie()->carrier == b->lie()->carrier && a->lie()->bracket == b->lie()->bracket))
    throw Error(Errc::precondition, "current modules over different Lie objects");
}

void check_action_boundary(const LiePtr& lie, const KarObject& carrier, const KarMorphism& act) {
  if (!(act.source() == kar_tensor(lie->carrier, carrier)) || !(act.target() == carrier))
    throw Error(Errc::boundary, "action must map lie carrier ⊗ carrier to carrier");
}

CurrentPtr build(CurrentModule::Data d) { return std::make_shared<const CurrentModule>(std::move(d)); }

KarMorphism morphism_residual(const KarMorphism& f, const CurrentModule& v, const CurrentModule& w, int n) {
  return kar_compose(f, v.action(n)) - kar_compose(w.action(n), kar_tensor(id(v.lie()->carrier), f));
}

}  // namespace

std::string rule_name(CurrentRule r) {
  switch (r) {
    case CurrentRule::trivial: return "trivial";
    case CurrentRule::evaluation: return "evaluation";
    case CurrentRule::induced: return "induced";
    case CurrentRule::truncated: return "truncated";
    case CurrentRule::extension: return "extension";
    case CurrentRule::tensor: return "tensor";
    case CurrentRule::dual: return "dual";
    case CurrentRule::explicit_actions: return "explicit";
  }
  return "?";
}

KarMorphism CurrentModule::action(int n) const {
  if (n < 0) return zero_action(d_.lie, d_.carrier);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
  }
  KarMorphism a = compute(n);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(n, std::move(a)).first->second;
}

KarMorphism CurrentModule::compute(int n) const {
  const LiePtr& lie = d_.lie;
  switch (d_.rule) {
    case CurrentRule::trivial:
      return zero_action(lie, d_.carrier);
    case CurrentRule::evaluation:
      return DeltaPoly(d_.point.pow(n)) * d_.base->action;
    case CurrentRule::induced:
      return kar_compose(d_.base->action, kar_tensor(id(lie->carrier), kar_power(d_.endo, n)));
    case CurrentRule::truncated: {
      std::vector<KarObject> parts(d_.k, d_.left->carrier());
      KarMorphism act = zero_action(lie, d_.carrier);
      for (int i = 0; i < d_.k; ++i)
        for (int j = 0; j <= i; ++j) {
          Rational c = binomial(n, i - j);
          if (c.is_zero() || n - i + j < 0) continue;
          act += DeltaPoly(c) * place(lie, parts, i, j, d_.left->action(n - i + j));
        }
      return act;
    }
    case CurrentRule::extension: {
      std::vector<KarObject> parts{d_.left->carrier(), d_.right->carrier()};
      KarMorphism act = place(lie, parts, 0, 0, d_.left->action(n)) + place(lie, parts, 1, 1, d_.right->action(n));
      // n·a^{n-1}, read as 0 at n = 0
      if (n >= 1) {
        Rational c = Rational(n) * d_.point.pow(n - 1);
        if (!c.is_zero()) act += DeltaPoly(c) * place(lie, parts, 1, 0, d_.tau);
      }
      return act;
    }
    case CurrentRule::tensor:
      return tensor_action(lie->carrier, d_.left->action(n), d_.left->carrier(), d_.right->action(n), d_.right->carrier());
    case CurrentRule::dual:
      return dual_action(lie->carrier, d_.left->action(n), d_.left->carrier());
    case CurrentRule::explicit_actions: {
      auto it = d_.actions.find(n);
      return it == d_.actions.end() ? zero_action(lie, d_.carrier) : it->second;
    }
  }
  throw Error(Errc::invalid_argument, "unknown rule");
}

CurrentPtr current_trivial(const LiePtr& lie, const KarObject& carrier) {
  CurrentModule::Data d;
  d.rule = CurrentRule::trivial;
  d.lie = lie;
  d.carrier = carrier;
  return build(std::move(d));
}

CurrentPtr current_evaluation(const Rational& point, const LieModule& base) {
  CurrentModule::Data d;
  d.rule = CurrentRule::evaluation;
  d.lie = base.lie;
  d.carrier = base.carrier;
  d.base = base;
  d.point = point;
  return build(std::move(d));
}

CurrentPtr current_induced(const LieModule& base, const KarMorphism& endo) {
  if (!(endo.source() == base.carrier) || !(endo.target() == base.carrier))
    throw Error(Errc::boundary, "induced module needs an endomorphism of the carrier");
  Report r = check_module_morphism(endo, base, base);
  if (!r.passed()) throw Error(Errc::validation, "endomorphism does not commute with the action");
  CurrentModule::Data d;
  d.rule = CurrentRule::induced;
  d.lie = base.lie;
  d.carrier = base.carrier;
  d.base = base;
  d.endo = endo;
  return build(std::move(d));
}

CurrentPtr current_truncated(const CurrentPtr& inner, int k) {
  if (k < 1) throw Error(Errc::invalid_argument, "truncation length must be positive");
  CurrentModule::Data d;
  d.rule = CurrentRule::truncated;
  d.lie = inner->lie();
  d.carrier = kar_direct_sum(std::vector<KarObject>(k, inner->carrier()));
  d.left = inner;
  d.k = k;
  return build(std::move(d));
}

CurrentPtr make_extension(const CurrentPtr& v, const CurrentPtr& w, const Rational& point, const KarMorphism& tau,
                          int degree_bound) {
  same_lie(v, w);
  const LiePtr& lie = v->lie();
  if (!(tau.source() == kar_tensor(lie->carrier, v->carrier())) || !(tau.target() == w->carrier()))
    throw Error(Errc::boundary, "tau must map lie carrier ⊗ V to W");
  CurrentPtr la = current_tensor(current_evaluation(point, adjoint_module(lie)), v);
  for (int n = 0; n <= degree_bound; ++n)
    if (!morphism_residual(tau, *la, *w, n).is_zero())
      throw Error(Errc::validation, "tau is not a current morphism at degree " + std::to_string(n));
  CurrentModule::Data d;
  d.rule = CurrentRule::extension;
  d.lie = lie;
  d.carrier = kar_direct_sum({v->carrier(), w->carrier()});
  d.left = v;
  d.right = w;
  d.point = point;
  d.tau = tau;
  return build(std::move(d));
}

CurrentPtr current_tensor(const CurrentPtr& v, const CurrentPtr& w) {
  same_lie(v, w);
  CurrentModule::Data d;
  d.rule = CurrentRule::tensor;
  d.lie = v->lie();
  d.carrier = kar_tensor(v->carrier(), w->carrier());
  d.left = v;
  d.right = w;
  return build(std::move(d));
}

CurrentPtr current_dual(const CurrentPtr& v) {
  CurrentModule::Data d;
  d.rule = CurrentRule::dual;
  d.lie = v->lie();
  d.carrier = kar_dual(v->carrier());
  d.left = v;
  return build(std::move(d));
}

CurrentPtr current_explicit(const LiePtr& lie, const KarObject& carrier, std::map<int, KarMorphism> actions) {
  for (const auto& [n, a] : actions) {
    if (n < 0) throw Error(Errc::invalid_argument, "negative degree");
    check_action_boundary(lie, carrier, a);
  }
  CurrentModule::Data d;
  d.rule = CurrentRule::explicit_actions;
  d.lie = lie;
  d.carrier = carrier;
  d.actions = std::move(actions);
  return build(std::move(d));
}

Report check_current_compatibility(const CurrentModule& m, int degree_bound) {
  if (degree_bound < 0) throw Error(Errc::invalid_argument, "degree bound must be non-negative");
  for (int n = 0; n <= degree_bound; ++n) m.action(n);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a <= degree_bound; ++a)
    for (int b = 0; a + b <= degree_bound; ++b) pairs.emplace_back(a, b);
  std::vector<KarMorphism> res(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    auto [a, b] = pairs[i];
    res[i] = compatibility_residual(*m.lie(), m.carrier(), m.action(a), m.action(b), m.action(a + b));
  });
  Report r;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    r.add_residual("COMPAT m=" + std::to_string(pairs[i].first) + " n=" + std::to_string(pairs[i].second), res[i]);
  r.add("degree bound", true, "checked m + n <= " + std::to_string(degree_bound) + "; higher degrees untested");
  return r;
}

Report check_current_morphism(const KarMorphism& f, const CurrentModule& v, const CurrentModule& w, int degree_bound) {
  if (degree_bound < 0) throw Error(Errc::invalid_argument, "degree bound must be non-negative");
  if (!(f.source() == v.carrier()) || !(f.target() == w.carrier())) throw Error(Errc::boundary, "morphism boundary mismatch");
  Report r;
  for (int n = 0; n <= degree_bound; ++n) r.add_residual("MORPHISM n=" + std::to_string(n), morphism_residual(f, v, w, n));
  return r;
}

// ---- solver ----

namespace {

using Key = std::tuple<int, std::size_t, std::size_t, Matching>;

struct LinearSystem {
  std::map<Key, std::size_t> rows;
  std::vector<std::map<std::size_t, Rational>> cols;
  std::optional<Rational> delta;

  Rational eval(const DeltaPoly& c) const {
    if (delta) return c.evaluate(*delta);
    if (!c.is_constant()) throw Error(Errc::unspecialized_delta, "solver needs a value for delta");
    return c.constant();
  }

  void add(std::size_t col, int family, const BlockMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        for (const auto& [m, c] : b.at(i, j).terms()) {
          Rational x = eval(c);
          if (x.is_zero()) continue;
          auto [it, _] = rows.emplace(Key{family, i, j, m}, rows.size());
          cols[col][it->second] += x;
        }
  }
};

MorphismSpaceResult solve_space(const CurrentModule& v, const CurrentModule& w, int degree_bound, std::optional<Rational> delta,
                                const QMatrix* target, int n_inc) {
  if (degree_bound < 0) throw Error(Errc::invalid_argument, "degree bound must be non-negative");
  if (!delta) {
    // fail early rather than after assembling half the system
    for (const auto& x : {v.carrier(), w.carrier()})
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
          for (const auto& [m, c] : x.idempotent().at(i, j).terms())
            if (!c.is_constant()) throw Error(Errc::unspecialized_delta, "solver needs a value for delta");
  }
  if (v.lie() != w.lie() && !(v.lie()->carrier == w.lie()->carrier && v.lie()->bracket == w.lie()->bracket))
    throw Error(Errc::precondition, "current modules over different Lie objects");

  MorphismSpaceResult out;
  out.degree_bound = degree_bound;
  out.delta = delta;
  out.source = v.carrier();
  out.target = w.carrier();
  const auto& src = v.carrier().summands();
  const auto& tgt = w.carrier().summands();
  for (std::size_t i = 0; i < tgt.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& m : hom_basis(src[j], tgt[i])) out.unknowns.push_back({i, j, m});

  std::vector<KarMorphism> av, aw;
  for (int n = 0; n <= degree_bound; ++n) {
    av.push_back(v.action(n));
    aw.push_back(w.action(n));
  }
  const BlockMatrix& ev = v.carrier().idempotent();
  const BlockMatrix& ew = w.carrier().idempotent();
  const BlockMatrix& el = v.lie()->carrier.idempotent();

  std::size_t nu = out.unknowns.size();
  std::vector<std::vector<std::pair<int, BlockMatrix>>> pieces(nu);
  parallel_for(nu, [&](std::size_t k) {
    BlockMatrix u = out.blocks(Vec<Rational>(nu, Rational(0)));
    const auto& uk = out.unknowns[k];
    u.set(uk.row, uk.col, DiagMorphism::single(src[uk.col], tgt[uk.row], uk.matching));
    auto& p = pieces[k];
    p.emplace_back(0, u - block_compose(ew, u));
    p.emplace_back(1, u - block_compose(u, ev));
    BlockMatrix lu = block_tensor(el, u);
    for (int n = 0; n <= degree_bound; ++n)
      p.emplace_back(2 + n, block_compose(u, av[n].blocks()) - block_compose(aw[n].blocks(), lu));
  });
  LinearSystem sys;
  sys.delta = delta;
  sys.cols.resize(nu);
  for (std::size_t k = 0; k < nu; ++k)
    for (const auto& [fam, b] : pieces[k]) sys.add(k, fam, b);

  std::size_t base_rows = sys.rows.size();
  std::size_t extra = target ? target->rows() * target->cols() : 0;
  QMatrix a(base_rows + extra, nu);
  Vec<Rational> rhs(base_rows + extra, Rational(0));
  for (std::size_t k = 0; k < nu; ++k)
    for (const auto& [r, x] : sys.cols[k]) a(r, k) = x;
  if (target) {
    IncarnationConfig cfg{n_inc, Flavor::oriented};
    for (std::size_t k = 0; k < nu; ++k) {
      Vec<Rational> e(nu, Rational(0));
      e[k] = Rational(1);
      QMatrix m = incarnate(out.blocks(e), cfg);
      const auto& d = m.data();
      for (std::size_t r = 0; r < d.size(); ++r)
        if (!d[r].is_zero()) a(base_rows + r, k) = d[r];
    }
    const auto& t = target->data();
    for (std::size_t r = 0; r < t.size(); ++r) rhs[base_rows + r] = t[r];
  }
  out.space = solve_affine(a, rhs);
  return out;
}

std::size_t incarnated_size(const KarObject& x, int n) {
  std::size_t total = 0;
  for (const auto& w : x.summands()) {
    std::size_t p = 1;
    for (std::size_t i = 0; i < w.size(); ++i) p *= n;
    total += p;
  }
  return total;
}

}  // namespace

BlockMatrix MorphismSpaceResult::blocks(const Vec<Rational>& coords) const {
  if (coords.size() != unknowns.size()) throw Error(Errc::dimension, "coordinate vector has the wrong length");
  BlockMatrix b(target.summands(), source.summands());
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    if (coords[k].is_zero()) continue;
    const auto& u = unknowns[k];
    b.add_to(u.row, u.col,
             DiagMorphism::single(source.summands()[u.col], target.summands()[u.row], u.matching, DeltaPoly(coords[k])));
  }
  return b;
}

KarMorphism MorphismSpaceResult::morphism(const Vec<Rational>& coords) const {
  return KarMorphism::unchecked(source, target, blocks(coords));
}

Json MorphismSpaceResult::to_json() const {
  Json j;
  j["degree_bound"] = degree_bound;
  j["delta"] = delta ? Json(delta->str()) : Json(nullptr);
  j["consistent"] = consistent();
  j["dimension"] = consistent() ? Json(dimension()) : Json(nullptr);
  Json u = Json::array();
  for (const auto& x : unknowns) {
    Json pairs = Json::array();
    std::size_t k = source.summands()[x.col].size();
    for (auto [p, q] : matching_pairs(x.matching)) {
      auto side = [&](std::size_t i) { return i < k ? Json::array({"bottom", i}) : Json::array({"top", i - k}); };
      Json e = side(p);
      for (auto& y : side(q)) e.push_back(y);
      pairs.push_back(e);
    }
    u.push_back({{"block", {x.row, x.col}}, {"pairs", pairs}});
  }
  j["unknowns"] = u;
  j["particular"] = space.particular ? vector_to_json(*space.particular) : Json(nullptr);
  Json b = Json::array();
  for (const auto& v : space.basis) b.push_back(vector_to_json(v));
  j["basis"] = b;
  return j;
}

MorphismSpaceResult current_morphism_space(const CurrentModule& v, const CurrentModule& w, const SolverConfig& cfg) {
  return solve_space(v, w, cfg.degree_bound, cfg.delta, nullptr, 0);
}

MorphismSpaceResult incarnation_preimage_space(const CurrentModule& v, const CurrentModule& w, int n, const QMatrix& target,
                                               int degree_bound) {
  if (n < 1) throw Error(Errc::invalid_argument, "incarnation dimension must be positive");
  for (const auto* x : {&v.carrier(), &w.carrier()})
    for (const auto& s : x->summands())
      if (s.flavor() && *s.flavor() != Flavor::oriented) throw Error(Errc::flavor, "preimages need oriented carriers");
  if (target.rows() != incarnated_size(w.carrier(), n) || target.cols() != incarnated_size(v.carrier(), n))
    throw Error(Errc::shape, "target matrix has the wrong shape");
  return solve_space(v, w, degree_bound, Rational(n), &target, n);
}

Report right_inverse_check(const Rational& coeff, std::optional<Rational> delta) {
  LiePtr gl = gl_object();
  Word w = Word::parse("uuu");
  LieModule rho = canonical_module(gl, w);
  KarMorphism section = KarMorphism::plain(DiagMorphism(tensor(cup(Word::parse("ud")), identity(w))));
  KarMorphism res = kar_compose(rho.action, DeltaPoly(coeff) * section) - KarMorphism::identity(rho.carrier);
  if (delta) res = kar_specialize(res, *delta);
  Report r;
  r.add_residual("rho ∘ (" + coeff.str() + " cup ⊗ id) = id", res);
  return r;
}

}  // namespace brauerlie
