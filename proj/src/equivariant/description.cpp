#include "brauerlie/equivariant/description.hpp"

#include "brauerlie/errors.hpp"

namespace brauerlie {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::invalid_argument, std::string("missing field '") + key + "'");
  return j.at(key);
}

CycloNumber scalar(const Json& v, unsigned conductor) {
  if (v.is_number_integer()) return CycloNumber(Rational(v.get<long>()));
  if (v.is_string()) return CycloNumber::parse(v.get<std::string>(), conductor);
  throw Error(Errc::invalid_argument, "scalars must be integers or strings");
}

CVec vec(const Json& v, unsigned conductor, std::size_t len) {
  if (!v.is_array() || v.size() != len) throw Error(Errc::dimension, "vector of length " + std::to_string(len) + " expected");
  CVec out;
  for (const auto& x : v) out.push_back(scalar(x, conductor));
  return out;
}

CMatrix matrix(const Json& v, unsigned conductor, std::size_t n) {
  if (!v.is_array() || v.size() != n) throw Error(Errc::dimension, "square matrix of size " + std::to_string(n) + " expected");
  std::vector<CVec> rows;
  for (const auto& r : v) rows.push_back(vec(r, conductor, n));
  return CMatrix::from_rows(rows);
}

std::vector<std::vector<CVec>> table(const Json& entries, unsigned conductor, std::size_t dim, bool skew) {
  std::vector<std::vector<CVec>> c(dim, std::vector<CVec>(dim, CVec(dim, CycloNumber(0))));
  for (const auto& e : entries) {
    std::size_t i = field(e, "i").get<std::size_t>(), j = field(e, "j").get<std::size_t>();
    if (i >= dim || j >= dim) throw Error(Errc::dimension, "structure index out of range");
    CVec v = vec(field(e, "value"), conductor, dim);
    c[i][j] = v;
    if (i != j) {
      if (skew)
        for (auto& x : v) x = -x;
      c[j][i] = v;
    }
  }
  return c;
}

GroupActionOnSpace action(const FiniteAbelianGroup& grp, const Json& v, unsigned conductor, std::size_t dim) {
  GroupActionOnSpace act{grp, {}, dim};
  if (!v.is_array() || v.size() != grp.factors().size()) throw Error(Errc::dimension, "need one matrix per invariant factor");
  for (const auto& m : v) act.generators.push_back(matrix(m, conductor, dim));
  return act;
}

Json element_json(const FiniteAbelianGroup::Element& x) {
  Json j = Json::array();
  for (unsigned k : x) j.push_back(k);
  return j;
}

}  // namespace

EquivariantProblem equivariant_from_json(const Json& j) {
  EquivariantProblem p;
  p.name = j.value("name", std::string("equivariant"));
  std::vector<unsigned> factors;
  for (const auto& f : field(j, "group")) {
    if (!f.is_number_integer() || f.get<long>() < 2) throw Error(Errc::invalid_argument, "invariant factors must be integers >= 2");
    factors.push_back(f.get<unsigned>());
  }
  FiniteAbelianGroup grp(factors);
  unsigned cond = grp.exponent();

  const Json& lie = field(j, "lie");
  if (lie.is_string()) {
    if (lie.get<std::string>() != "sl2") throw Error(Errc::invalid_argument, "unknown lie algebra preset");
    p.g = sl2();
  } else {
    p.g.dim = field(lie, "dim").get<std::size_t>();
    p.g.c = table(field(lie, "brackets"), cond, p.g.dim, true);
    if (lie.contains("names")) p.g.names = lie.at("names").get<std::vector<std::string>>();
  }

  const Json& alg = field(j, "algebra");
  if (alg.contains("truncated")) {
    p.a = truncated_polynomial_algebra(alg.at("truncated").get<unsigned>());
  } else if (alg.contains("quotient")) {
    QPoly q;
    for (const auto& c : alg.at("quotient")) q.push_back(c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<long>()));
    p.a = quotient_algebra(q);
  } else {
    p.a.dim = field(alg, "dim").get<std::size_t>();
    p.a.c = table(field(alg, "products"), cond, p.a.dim, false);
    if (alg.contains("unit")) p.a.unit = vec(alg.at("unit"), cond, p.a.dim);
  }

  p.g_action = action(grp, field(j, "lie_action"), cond, p.g.dim);
  p.a_action = action(grp, field(j, "algebra_action"), cond, p.a.dim);
  if (j.contains("ideal")) {
    std::vector<CVec> basis;
    for (const auto& v : j.at("ideal")) basis.push_back(vec(v, cond, p.a.dim));
    p.ideal = basis;
  }
  if (j.contains("module")) {
    const Json& m = j.at("module");
    std::size_t d = field(m, "dim").get<std::size_t>();
    const Json& ms = field(m, "matrices");
    if (!ms.is_array() || ms.size() != p.g.dim) throw Error(Errc::dimension, "need one module matrix per lie basis vector");
    std::vector<CMatrix> rho;
    for (const auto& x : ms) rho.push_back(matrix(x, cond, d));
    p.module = rho;
  }
  p.validate_module = j.value("validate_module", true);
  return p;
}

EquivariantSuiteResult run_equivariant_suite(const EquivariantProblem& p) {
  EquivariantSuiteResult out;
  EquivariantMapAlgebra ema = equivariant_map_algebra(p.g, p.a, p.g_action, p.a_action);
  out.report.merge(ema.report, "map algebra");
  out.summary["name"] = p.name;
  out.summary["map_algebra"] = ema.to_json();
  out.summary["map_algebra"].erase("report");
  if (p.ideal) {
    MaxIdeal m = make_max_ideal(p.a, *p.ideal);
    Stabilizer st = ideal_stabilizer(p.a, p.a_action, m);
    Json els = Json::array();
    for (const auto& x : st.elements) els.push_back(element_json(x));
    out.summary["stabilizer"] = {{"elements", els}, {"invariants", st.invariants}};
    Json ev = Json::array();
    for (const auto& x : m.ev) ev.push_back(x.str());
    out.summary["ev"] = ev;
    for (const auto& chi : characters(p.a_action.group))
      if (!trivial_on(p.a_action.group, chi, st.elements)) out.report.merge(twisted_evaluation_zero_check(p.a, p.a_action, m, chi));
    if (p.module) {
      auto mod = equivariant_evaluation_module(ema, m, *p.module, p.validate_module);
      out.report.merge(mod.report, "evaluation module");
      Json al = Json::array();
      for (const auto& c : mod.allowed) al.push_back(character_str(c));
      out.summary["allowed_characters"] = al;
      out.summary["module_dim"] = mod.dim;
    }
  }
  out.summary["passed"] = out.report.passed();
  return out;
}

}  // namespace brauerlie
