#include "brauerlie/equivariant/equivariant.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "brauerlie/errors.hpp"
#include "brauerlie/parallel.hpp"

namespace brauerlie {
namespace {

Json cvec_json(const CVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

CVec zeros(std::size_t n) { return CVec(n, CycloNumber(0)); }

CVec unit_vector(std::size_t n, std::size_t i) {
  CVec v = zeros(n);
  v[i] = CycloNumber(1);
  return v;
}

CMatrix rows_matrix(const std::vector<CVec>& rows, std::size_t cols) {
  CMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

bool in_span(const std::vector<CVec>& span, const CVec& v, std::size_t dim) {
  std::size_t r = rank(rows_matrix(span, dim));
  auto more = span;
  more.push_back(v);
  return rank(rows_matrix(more, dim)) == r;
}

CycloNumber dot(const CVec& a, const CVec& b) {
  CycloNumber s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

CVec bilinear(const std::vector<std::vector<CVec>>& c, std::size_t dim, const CVec& a, const CVec& b) {
  CVec r = zeros(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      CycloNumber s = a[i] * b[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (!c[i][j][k].is_zero()) r[k] += s * c[i][j][k];
    }
  }
  return r;
}

void check_table(const std::vector<std::vector<CVec>>& c, std::size_t dim, const char* what) {
  if (c.size() != dim) throw Error(Errc::dimension, std::string(what) + ": structure table has the wrong size");
  for (const auto& row : c) {
    if (row.size() != dim) throw Error(Errc::dimension, std::string(what) + ": structure table has the wrong size");
    for (const auto& v : row)
      if (v.size() != dim) throw Error(Errc::dimension, std::string(what) + ": structure vector has the wrong length");
  }
}

std::string idx(std::size_t i, std::size_t j) { return std::to_string(i) + "," + std::to_string(j); }

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

// ---- groups and characters ----

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<unsigned> factors) : f_(std::move(factors)) {
  for (unsigned f : f_)
    if (f < 2) throw Error(Errc::invalid_argument, "invariant factors must be at least 2");
}

std::size_t FiniteAbelianGroup::order() const {
  std::size_t n = 1;
  for (unsigned f : f_) n *= f;
  return n;
}

unsigned FiniteAbelianGroup::exponent() const {
  unsigned e = 1;
  for (unsigned f : f_) e = std::lcm(e, f);
  return e;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::elements() const {
  std::vector<Element> out{identity()};
  for (std::size_t i = f_.size(); i-- > 0;) {
    std::vector<Element> next;
    for (const auto& x : out)
      for (unsigned k = 0; k < f_[i]; ++k) {
        Element y = x;
        y[i] = k;
        next.push_back(y);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  Element r(f_.size());
  for (std::size_t i = 0; i < f_.size(); ++i) r[i] = (a[i] + b[i]) % f_[i];
  return r;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::scale(const Element& a, unsigned k) const {
  Element r(f_.size());
  for (std::size_t i = 0; i < f_.size(); ++i) r[i] = static_cast<unsigned>((static_cast<unsigned long>(a[i]) * k) % f_[i]);
  return r;
}

unsigned FiniteAbelianGroup::element_order(const Element& a) const {
  unsigned o = 1;
  for (std::size_t i = 0; i < f_.size(); ++i) o = std::lcm(o, f_[i] / std::gcd(f_[i], a[i]));
  return o;
}

CycloNumber Character::value(const FiniteAbelianGroup& g, const FiniteAbelianGroup::Element& x) const {
  unsigned e = g.exponent();
  unsigned long k = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) k += static_cast<unsigned long>(exponents[i]) * x[i] * (e / g.factors()[i]);
  k %= e;
  if (k == 0) return CycloNumber(1);
  return CycloNumber::root_of_unity(e, static_cast<long>(k));
}

bool Character::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](unsigned k) { return k == 0; });
}

std::vector<Character> characters(const FiniteAbelianGroup& g) {
  std::vector<Character> out;
  for (auto& x : g.elements()) out.push_back(Character{x});
  return out;
}

Character character_product(const FiniteAbelianGroup& g, const Character& a, const Character& b) {
  return Character{g.add(a.exponents, b.exponents)};
}

Character character_inverse(const FiniteAbelianGroup& g, const Character& a) {
  Character r = a;
  for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] = (g.factors()[i] - r.exponents[i]) % g.factors()[i];
  return r;
}

bool trivial_on(const FiniteAbelianGroup& g, const Character& chi, const std::vector<FiniteAbelianGroup::Element>& xs) {
  return std::all_of(xs.begin(), xs.end(), [&](const auto& x) { return chi.value(g, x) == CycloNumber(1); });
}

std::string character_str(const Character& chi) {
  std::string s = "(";
  for (std::size_t i = 0; i < chi.exponents.size(); ++i) s += (i ? "," : "") + std::to_string(chi.exponents[i]);
  return s + ")";
}

// ---- algebras ----

CVec FDAlgebra::mul(const CVec& a, const CVec& b) const { return bilinear(c, dim, a, b); }

Report FDAlgebra::validate() const {
  check_table(c, dim, "algebra");
  Report r;
  bool comm = true, assoc = true;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (commutative && !(c[i][j] == c[j][i])) comm = false;
      for (std::size_t k = 0; k < dim && assoc; ++k) {
        CVec ei = unit_vector(dim, i), ej = unit_vector(dim, j), ek = unit_vector(dim, k);
        if (!(mul(mul(ei, ej), ek) == mul(ei, mul(ej, ek)))) assoc = false;
      }
    }
  if (commutative) r.add("commutative", comm);
  r.add("associative", assoc);
  if (unit) {
    bool ok = unit->size() == dim;
    for (std::size_t i = 0; i < dim && ok; ++i) {
      CVec ei = unit_vector(dim, i);
      ok = mul(*unit, ei) == ei && mul(ei, *unit) == ei;
    }
    r.add("unit", ok);
  }
  return r;
}

FDAlgebra quotient_algebra(const QPoly& monic) {
  if (monic.size() < 2 || !monic.back().is_one()) throw Error(Errc::invalid_argument, "need a monic polynomial of degree >= 1");
  std::size_t d = monic.size() - 1;
  FDAlgebra a;
  a.dim = d;
  // t^k reduced mod p, for k < 2d - 1
  std::vector<CVec> pw;
  CVec cur = unit_vector(d, 0);
  for (std::size_t k = 0; k + 1 < 2 * d; ++k) {
    pw.push_back(cur);
    CVec next = zeros(d);
    CycloNumber top = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) next[i] = cur[i - 1];
    for (std::size_t i = 0; i < d; ++i)
      if (!top.is_zero()) next[i] -= top * CycloNumber(monic[i]);
    cur = next;
  }
  a.c.assign(d, std::vector<CVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a.c[i][j] = pw[i + j];
  a.unit = unit_vector(d, 0);
  return a;
}

FDAlgebra truncated_polynomial_algebra(unsigned k) {
  if (k < 1) throw Error(Errc::invalid_argument, "truncation degree must be positive");
  QPoly p(k + 1, Rational(0));
  p[k] = Rational(1);
  return quotient_algebra(p);
}

CVec FDLieAlgebra::bracket(const CVec& a, const CVec& b) const { return bilinear(c, dim, a, b); }

Report FDLieAlgebra::validate() const {
  check_table(c, dim, "lie algebra");
  Report r;
  bool skew = true, jac = true;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      CVec s = c[i][j];
      for (std::size_t k = 0; k < dim; ++k) s[k] += c[j][i][k];
      if (!std::all_of(s.begin(), s.end(), [](const CycloNumber& x) { return x.is_zero(); })) skew = false;
      for (std::size_t k = 0; k < dim && jac; ++k) {
        CVec x = unit_vector(dim, i), y = unit_vector(dim, j), z = unit_vector(dim, k);
        CVec t = bracket(x, bracket(y, z)), u = bracket(y, bracket(z, x)), v = bracket(z, bracket(x, y));
        for (std::size_t l = 0; l < dim; ++l)
          if (!(t[l] + u[l] + v[l]).is_zero()) jac = false;
      }
    }
  r.add("SKEW", skew);
  r.add("JACOBI", jac);
  return r;
}

FDLieAlgebra sl2() {
  FDLieAlgebra g;
  g.dim = 3;
  g.names = {"e", "h", "f"};
  g.c.assign(3, std::vector<CVec>(3, zeros(3)));
  auto set = [&](int i, int j, int k, long v) {
    g.c[i][j][k] = CycloNumber(v);
    g.c[j][i][k] = CycloNumber(-v);
  };
  set(0, 2, 1, 1);   // [e,f] = h
  set(1, 0, 0, 2);   // [h,e] = 2e
  set(1, 2, 2, -2);  // [h,f] = -2f
  return g;
}

// ---- actions ----

std::size_t GroupActionOnSpace::dim() const { return generators.empty() ? space_dim : generators[0].rows(); }

CMatrix GroupActionOnSpace::matrix(const FiniteAbelianGroup::Element& x) const {
  if (generators.size() != group.factors().size()) throw Error(Errc::dimension, "need one generator matrix per invariant factor");
  std::size_t n = dim();
  CMatrix m = CMatrix::identity(n);
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (unsigned k = 0; k < x[i]; ++k) m = generators[i] * m;
  return m;
}

Report GroupActionOnSpace::validate() const {
  if (generators.size() != group.factors().size()) throw Error(Errc::dimension, "need one generator matrix per invariant factor");
  Report r;
  std::size_t n = dim();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].rows() != n || generators[i].cols() != n) throw Error(Errc::dimension, "generator matrices must be square of one size");
    CMatrix p = CMatrix::identity(n);
    bool early = false;
    for (unsigned k = 1; k <= group.factors()[i]; ++k) {
      p = generators[i] * p;
      if (k < group.factors()[i] && p == CMatrix::identity(n)) early = true;
    }
    // order dividing the factor is enough for a well-defined action
    r.add("generator " + std::to_string(i) + " order divides " + std::to_string(group.factors()[i]), p == CMatrix::identity(n),
          early ? "order is a proper divisor" : "");
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      r.add("generators " + idx(i, j) + " commute", generators[i] * generators[j] == generators[j] * generators[i]);
  }
  return r;
}

Report check_automorphisms(const GroupActionOnSpace& act, const FDLieAlgebra& g) {
  if (act.dim() != g.dim && !(act.generators.empty() && g.dim == 0)) {
    if (!act.generators.empty()) throw Error(Errc::dimension, "action and lie algebra dimensions differ");
  }
  Report r;
  for (std::size_t s = 0; s < act.generators.size(); ++s) {
    const CMatrix& m = act.generators[s];
    bool ok = true;
    for (std::size_t i = 0; i < g.dim && ok; ++i)
      for (std::size_t j = 0; j < g.dim && ok; ++j)
        ok = m * g.c[i][j] == g.bracket(m.column(i), m.column(j));
    r.add("generator " + std::to_string(s) + " preserves the bracket", ok);
  }
  return r;
}

Report check_automorphisms(const GroupActionOnSpace& act, const FDAlgebra& a) {
  if (!act.generators.empty() && act.dim() != a.dim) throw Error(Errc::dimension, "action and algebra dimensions differ");
  Report r;
  for (std::size_t s = 0; s < act.generators.size(); ++s) {
    const CMatrix& m = act.generators[s];
    bool ok = true;
    for (std::size_t i = 0; i < a.dim && ok; ++i)
      for (std::size_t j = 0; j < a.dim && ok; ++j) ok = m * a.c[i][j] == a.mul(m.column(i), m.column(j));
    r.add("generator " + std::to_string(s) + " preserves the product", ok);
  }
  return r;
}

CMatrix isotypic_projector(const GroupActionOnSpace& act, const Character& chi) {
  std::size_t n = act.dim();
  CMatrix p(n, n);
  for (const auto& x : act.group.elements()) p = p + act.matrix(x).scaled(chi.value(act.group, x).inverse());
  return p.scaled(CycloNumber(Rational(1, static_cast<long>(act.group.order()))));
}

Report check_isotypic_decomposition(const GroupActionOnSpace& act) {
  auto chars = characters(act.group);
  std::vector<CMatrix> ps(chars.size());
  parallel_for(chars.size(), [&](std::size_t i) { ps[i] = isotypic_projector(act, chars[i]); });
  std::size_t n = act.dim();
  Report r;
  CMatrix sum(n, n);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    sum = sum + ps[i];
    r.add("P" + character_str(chars[i]) + " idempotent", ps[i] * ps[i] == ps[i]);
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      r.add("P" + character_str(chars[i]) + " P" + character_str(chars[j]) + " = 0", (ps[i] * ps[j]).is_zero() && (ps[j] * ps[i]).is_zero());
  }
  r.add("projectors sum to identity", sum == CMatrix::identity(n));
  return r;
}

std::vector<CVec> isotypic_basis(const GroupActionOnSpace& act, const Character& chi) {
  CMatrix p = isotypic_projector(act, chi);
  auto rr = rref(p);
  std::vector<CVec> out;
  for (auto c : rr.pivots) out.push_back(p.column(c));
  return out;
}

// ---- ideals ----

MaxIdeal make_max_ideal(const FDAlgebra& a, std::vector<CVec> basis) {
  for (const auto& v : basis)
    if (v.size() != a.dim) throw Error(Errc::dimension, "ideal vectors must have the algebra's dimension");
  if (a.dim == 0 || basis.size() + 1 != a.dim || rank(rows_matrix(basis, a.dim)) != basis.size())
    throw Error(Errc::validation, "ideal must have codimension one");
  for (std::size_t i = 0; i < a.dim; ++i)
    for (const auto& m : basis)
      if (!in_span(basis, a.mul(unit_vector(a.dim, i), m), a.dim)) throw Error(Errc::validation, "span is not an ideal");
  CVec phi = kernel_basis(rows_matrix(basis, a.dim)).at(0);
  std::optional<CycloNumber> scale;
  for (std::size_t i = 0; i < a.dim && !scale; ++i)
    for (std::size_t j = 0; j < a.dim && !scale; ++j) {
      CycloNumber pij = dot(phi, a.c[i][j]);
      if (!pij.is_zero()) scale = phi[i] * phi[j] / pij;
    }
  if (!scale || scale->is_zero()) throw Error(Errc::validation, "quotient is not isomorphic to the base field");
  MaxIdeal out;
  out.basis = std::move(basis);
  out.ev = phi;
  CycloNumber inv = scale->inverse();
  for (auto& x : out.ev) x = x * inv;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (!(dot(out.ev, a.c[i][j]) == out.ev[i] * out.ev[j]))
        throw Error(Errc::validation, "evaluation map is not multiplicative");
  return out;
}

Stabilizer ideal_stabilizer(const FDAlgebra& a, const GroupActionOnSpace& act, const MaxIdeal& m) {
  Stabilizer s;
  for (const auto& x : act.group.elements()) {
    if (act.generators.empty()) {
      s.elements.push_back(x);
      continue;
    }
    CMatrix g = act.matrix(x);
    bool keeps = std::all_of(m.basis.begin(), m.basis.end(), [&](const CVec& v) { return in_span(m.basis, g * v, a.dim); });
    if (keeps) s.elements.push_back(x);
  }
  // invariant factors from p-primary element counts
  std::size_t order = s.elements.size();
  std::map<unsigned, std::vector<unsigned>> primary;  // p -> exponents, descending
  for (unsigned p : prime_factors(static_cast<unsigned>(order))) {
    std::vector<std::size_t> cnt{1};
    for (unsigned k = 1;; ++k) {
      unsigned pk = 1;
      for (unsigned t = 0; t < k; ++t) pk *= p;
      std::size_t c = std::count_if(s.elements.begin(), s.elements.end(),
                                    [&](const auto& x) { return act.group.scale(x, pk) == act.group.identity(); });
      if (c == cnt.back()) break;
      cnt.push_back(c);
    }
    std::vector<unsigned> at_least;  // number of cyclic factors of exponent >= k
    for (std::size_t k = 1; k < cnt.size(); ++k) {
      unsigned r = 0;
      for (std::size_t q = cnt[k] / cnt[k - 1]; q > 1; q /= p) ++r;
      at_least.push_back(r);
    }
    std::vector<unsigned> exps;
    for (unsigned i = 0; i < (at_least.empty() ? 0 : at_least[0]); ++i) {
      unsigned e = 0;
      while (e < at_least.size() && at_least[e] > i) ++e;
      exps.push_back(e);
    }
    primary[p] = exps;
  }
  std::size_t width = 0;
  for (auto& [p, e] : primary) width = std::max(width, e.size());
  std::vector<unsigned> inv(width, 1);
  for (auto& [p, e] : primary)
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned t = 0; t < e[i]; ++t) inv[width - 1 - i] *= p;
  s.invariants = inv;
  return s;
}

Report twisted_evaluation_zero_check(const FDAlgebra& a, const GroupActionOnSpace& act, const MaxIdeal& m, const Character& f) {
  Stabilizer st = ideal_stabilizer(a, act, m);
  if (trivial_on(act.group, f, st.elements))
    throw Error(Errc::precondition, "character " + character_str(f) + " is trivial on the ideal stabilizer");
  Report r;
  std::vector<CVec> piece = isotypic_basis(act, f);
  CVec res;
  for (const auto& v : piece) res.push_back(dot(m.ev, v));
  bool zero = std::all_of(res.begin(), res.end(), [](const CycloNumber& x) { return x.is_zero(); });
  r.add("ev_m(A" + character_str(f) + ") = 0", zero, "dim A_f = " + std::to_string(piece.size()),
        zero ? std::nullopt : std::optional<Json>(cvec_json(res)));
  return r;
}

// ---- equivariant map algebras ----

CVec tensor_bracket(const FDLieAlgebra& g, const FDAlgebra& a, const CVec& x, const CVec& y) {
  std::size_t da = a.dim;
  CVec r = zeros(g.dim * da);
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p].is_zero()) continue;
    for (std::size_t q = 0; q < y.size(); ++q) {
      if (y[q].is_zero()) continue;
      CycloNumber s = x[p] * y[q];
      const CVec& br = g.c[p / da][q / da];
      const CVec& pr = a.c[p % da][q % da];
      for (std::size_t i = 0; i < g.dim; ++i) {
        if (br[i].is_zero()) continue;
        for (std::size_t j = 0; j < da; ++j)
          if (!pr[j].is_zero()) r[i * da + j] += s * br[i] * pr[j];
      }
    }
  }
  return r;
}

EquivariantMapAlgebra equivariant_map_algebra(const FDLieAlgebra& g, const FDAlgebra& a, GroupActionOnSpace g_action,
                                              GroupActionOnSpace a_action) {
  if (g_action.generators.empty()) g_action.space_dim = g.dim;
  if (a_action.generators.empty()) a_action.space_dim = a.dim;
  if (!(g_action.group.factors() == a_action.group.factors())) throw Error(Errc::invalid_argument, "actions use different groups");
  if (!g.validate().passed()) throw Error(Errc::validation, "lie algebra fails its axioms");
  if (!a.validate().passed()) throw Error(Errc::validation, "algebra fails its axioms");
  if (!g_action.validate().passed() || !a_action.validate().passed()) throw Error(Errc::validation, "invalid group action");
  if (!check_automorphisms(g_action, g).passed() || !check_automorphisms(a_action, a).passed())
    throw Error(Errc::validation, "action-not-automorphism");

  EquivariantMapAlgebra e{g, a, g_action, a_action, {}, {}, {}, {}, {}, 0, {}};
  const auto& grp = g_action.group;
  auto chars = characters(grp);
  std::size_t dg = g.dim, da = a.dim;

  std::vector<std::vector<CVec>> gb(chars.size()), ab(chars.size());
  parallel_for(chars.size(), [&](std::size_t i) {
    gb[i] = isotypic_basis(g_action, chars[i]);
    ab[i] = isotypic_basis(a_action, character_inverse(grp, chars[i]));
  });
  std::size_t expected = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    e.pieces.push_back({chars[i], gb[i], ab[i]});
    expected += gb[i].size() * ab[i].size();
    for (const auto& x : gb[i])
      for (const auto& y : ab[i]) {
        CVec v = zeros(dg * da);
        for (std::size_t p = 0; p < dg; ++p)
          for (std::size_t q = 0; q < da; ++q)
            if (!x[p].is_zero() && !y[q].is_zero()) v[p * da + q] = x[p] * y[q];
        e.basis.push_back(v);
        e.piece_of.push_back(i);
        e.factors.emplace_back(x, y);
      }
  }

  e.report.merge(check_isotypic_decomposition(g_action), "g");
  e.report.merge(check_isotypic_decomposition(a_action), "A");

  bool graded = true;
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < chars.size(); ++j) {
      CMatrix p = isotypic_projector(g_action, character_product(grp, chars[i], chars[j]));
      for (const auto& x : gb[i])
        for (const auto& y : gb[j]) {
          CVec b = g.bracket(x, y);
          if (!(p * b == b)) graded = false;
        }
    }
  e.report.add("graded bracket containment", graded);

  CMatrix fixed(dg * da, dg * da);
  for (const auto& x : grp.elements()) fixed = fixed + kron(g_action.matrix(x), a_action.matrix(x));
  fixed = fixed.scaled(CycloNumber(Rational(1, static_cast<long>(grp.order()))));
  e.fixed_rank = rank(fixed);
  e.report.add("fixed-point rank equals sum of piece dimensions", e.fixed_rank == expected,
               std::to_string(e.fixed_rank) + " vs " + std::to_string(expected));

  std::size_t n = e.basis.size();
  CMatrix b(dg * da, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < dg * da; ++r) b(r, k) = e.basis[k][r];
  e.structure.assign(n, std::vector<CVec>(n));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<char> closed(pairs.size(), 0);
  parallel_for(pairs.size(), [&](std::size_t t) {
    auto [i, j] = pairs[t];
    auto sol = solve_affine(b, tensor_bracket(g, a, e.basis[i], e.basis[j]));
    if (sol.consistent()) {
      e.structure[i][j] = *sol.particular;
      closed[t] = 1;
    }
  });
  e.report.add("bracket closes on the fixed points", std::all_of(closed.begin(), closed.end(), [](char c) { return c != 0; }));
  return e;
}

Json EquivariantMapAlgebra::to_json() const {
  Json j;
  j["dimension"] = dimension();
  j["fixed_rank"] = fixed_rank;
  Json ps = Json::array();
  for (const auto& p : pieces)
    ps.push_back({{"character", character_str(p.chi)}, {"g_dim", p.g_basis.size()}, {"a_dim", p.a_basis.size()}});
  j["pieces"] = ps;
  j["report"] = report.to_json();
  return j;
}

EquivariantEvaluationModule equivariant_evaluation_module(const EquivariantMapAlgebra& ema, const MaxIdeal& m,
                                                          const std::vector<CMatrix>& rho, bool validate_module) {
  const auto& g = ema.g;
  const auto& grp = ema.a_action.group;
  if (rho.size() != g.dim) throw Error(Errc::dimension, "need one module matrix per lie algebra basis vector");
  std::size_t dv = rho.empty() ? 0 : rho[0].rows();
  for (const auto& r : rho)
    if (r.rows() != dv || r.cols() != dv) throw Error(Errc::dimension, "module matrices must be square of one size");

  EquivariantEvaluationModule out;
  out.dim = dv;
  Stabilizer st = ideal_stabilizer(ema.a, ema.a_action, m);
  std::vector<CVec> gm;
  for (const auto& p : ema.pieces)
    if (trivial_on(grp, p.chi, st.elements)) {
      out.allowed.push_back(p.chi);
      gm.insert(gm.end(), p.g_basis.begin(), p.g_basis.end());
    }
  auto rep = [&](const CVec& x) {
    CMatrix r(dv, dv);
    for (std::size_t i = 0; i < g.dim; ++i)
      if (!x[i].is_zero()) r = r + rho[i].scaled(x[i]);
    return r;
  };
  auto allowed = [&](const Character& c) { return std::find(out.allowed.begin(), out.allowed.end(), c) != out.allowed.end(); };

  bool is_module = true;
  for (const auto& x : gm)
    for (const auto& y : gm) {
      CMatrix rx = rep(x), ry = rep(y);
      if (!(rep(g.bracket(x, y)) == rx * ry - ry * rx)) is_module = false;
    }
  if (validate_module && !is_module) throw Error(Errc::validation, "V is not a module over g_m");
  out.report.add("V is a g_m-module", is_module, std::to_string(gm.size()) + "-dimensional g_m");

  auto act = [&](const Character& chi, const CVec& x, const CVec& a) {
    if (!allowed(chi)) return CMatrix(dv, dv);
    return rep(x).scaled(dot(m.ev, a));
  };
  std::size_t n = ema.basis.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& [x, a] = ema.factors[k];
    out.actions.push_back(act(ema.pieces[ema.piece_of[k]].chi, x, a));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [x, a] = ema.factors[i];
      const auto& [y, b] = ema.factors[j];
      Character fg = character_product(grp, ema.pieces[ema.piece_of[i]].chi, ema.pieces[ema.piece_of[j]].chi);
      CMatrix lhs = out.actions[i] * out.actions[j];
      CMatrix br = act(fg, g.bracket(x, y), ema.a.mul(a, b));
      CMatrix res = lhs - br - out.actions[j] * out.actions[i];
      out.report.add("COMPAT " + idx(i, j), res.is_zero());
      if (!ema.structure[i][j].empty()) {
        CMatrix via(dv, dv);
        for (std::size_t k = 0; k < n; ++k)
          if (!ema.structure[i][j][k].is_zero()) via = via + out.actions[k].scaled(ema.structure[i][j][k]);
        out.report.add("bracket via structure constants " + idx(i, j), via == br);
      }
    }
  return out;
}

}  // namespace brauerlie
