#include "brauerlie/current/description.hpp"

#include "brauerlie/diagram/parser.hpp"
#include "brauerlie/errors.hpp"

namespace brauerlie {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::invalid_argument, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw Error(Errc::invalid_argument, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Rational rational_of(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw Error(Errc::invalid_argument, "expected a rational as integer or string");
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw Error(Errc::invalid_argument, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

// Morphism between single-summand objects from a diagram expression.
KarMorphism kar_from_expr(const std::string& expr, const KarObject& src, const KarObject& tgt) {
  if (src.size() != 1 || tgt.size() != 1)
    throw Error(Errc::unsupported_ring, "expressions only describe morphisms between single-summand carriers");
  DiagMorphism f = parse_expr(expr);
  if (!(f.domain() == src.summands()[0]) || !(f.codomain() == tgt.summands()[0]))
    throw Error(Errc::boundary, "expression '" + expr + "' has the wrong boundary");
  return KarMorphism(src, tgt, BlockMatrix({tgt.summands()[0]}, {src.summands()[0]}, {f}));
}

}  // namespace

LiePtr lie_from_name(const std::string& name) {
  if (name == "oriented-gl") return gl_object();
  if (name == "unoriented-so") return unoriented_so_object();
  throw Error(Errc::invalid_argument, "unknown lie object '" + name + "'");
}

LieModule module_from_json(const Json& j, const LiePtr& lie) {
  std::string kind = string_field(j, "module");
  if (kind == "canonical") return canonical_module(lie, Word::parse(string_field(j, "word")));
  if (kind == "natural") return lie->name == "so" ? unoriented_natural_module(lie) : natural_module(lie);
  if (kind == "dual-natural") return dual_natural_module(lie);
  if (kind == "adjoint") return adjoint_module(lie);
  if (kind == "trivial") return trivial_module(lie, KarObject::of(Word::parse(string_field(j, "word"))));
  if (kind == "tensor") return tensor_module(module_from_json(field(j, "left"), lie), module_from_json(field(j, "right"), lie));
  if (kind == "dual") return dual_module(module_from_json(field(j, "inner"), lie));
  throw Error(Errc::invalid_argument, "unknown module kind '" + kind + "'");
}

CurrentPtr current_from_json(const Json& j, const LiePtr& lie, int degree_bound) {
  std::string rule = string_field(j, "rule");
  if (rule == "trivial") return current_trivial(lie, KarObject::of(Word::parse(string_field(j, "word"))));
  if (rule == "evaluation") return current_evaluation(rational_of(field(j, "point")), module_from_json(field(j, "base"), lie));
  if (rule == "induced") {
    LieModule base = module_from_json(field(j, "base"), lie);
    return current_induced(base, kar_from_expr(string_field(j, "endo"), base.carrier, base.carrier));
  }
  if (rule == "truncated") return current_truncated(current_from_json(field(j, "inner"), lie, degree_bound), int_field(j, "k"));
  if (rule == "extension") {
    CurrentPtr v = current_from_json(field(j, "V"), lie, degree_bound);
    CurrentPtr w = current_from_json(field(j, "W"), lie, degree_bound);
    KarMorphism tau = kar_from_expr(string_field(j, "tau"), kar_tensor(lie->carrier, v->carrier()), w->carrier());
    return make_extension(v, w, rational_of(field(j, "point")), tau, degree_bound);
  }
  if (rule == "tensor")
    return current_tensor(current_from_json(field(j, "left"), lie, degree_bound),
                          current_from_json(field(j, "right"), lie, degree_bound));
  if (rule == "dual") return current_dual(current_from_json(field(j, "inner"), lie, degree_bound));
  if (rule == "explicit") {
    KarObject carrier = KarObject::of(Word::parse(string_field(j, "carrier")));
    std::map<int, KarMorphism> acts;
    const Json& a = field(j, "actions");
    if (!a.is_object()) throw Error(Errc::invalid_argument, "'actions' must map degrees to expressions");
    for (const auto& [k, v] : a.items()) {
      int n;
      try {
        std::size_t used = 0;
        n = std::stoi(k, &used);
        if (used != k.size()) throw std::invalid_argument(k);
      } catch (const std::exception&) {
        throw Error(Errc::invalid_argument, "degree '" + k + "' is not an integer");
      }
      if (!v.is_string()) throw Error(Errc::invalid_argument, "actions must be expressions");
      acts.emplace(n, kar_from_expr(v.get<std::string>(), kar_tensor(lie->carrier, carrier), carrier));
    }
    return current_explicit(lie, carrier, std::move(acts));
  }
  throw Error(Errc::invalid_argument, "unknown rule '" + rule + "'");
}

CurrentProblem problem_from_json(const Json& j) {
  CurrentProblem p;
  p.lie = lie_from_name(string_field(j, "lie"));
  if (j.contains("delta") && !j.at("delta").is_null()) p.delta = rational_of(j.at("delta"));
  if (j.contains("degree_bound")) p.degree_bound = int_field(j, "degree_bound");
  if (p.degree_bound < 0) throw Error(Errc::invalid_argument, "degree bound must be non-negative");
  p.v = current_from_json(field(j, "V"), p.lie, p.degree_bound);
  p.w = j.contains("W") ? current_from_json(j.at("W"), p.lie, p.degree_bound) : p.v;
  if (j.contains("target")) {
    p.target = string_field(j, "target");
    if (*p.target != "identity") throw Error(Errc::invalid_argument, "only the identity target is supported");
    p.n = int_field(j, "n");
  } else if (j.contains("n")) {
    p.n = int_field(j, "n");
  }
  return p;
}

MorphismSpaceResult solve_problem(const CurrentProblem& p) {
  if (p.target) {
    if (p.delta && *p.delta != Rational(*p.n)) throw Error(Errc::precondition, "delta must equal n for incarnation preimages");
    std::size_t rows = 0, cols = 0;
    auto size = [&](const KarObject& x) {
      std::size_t t = 0;
      for (const auto& w : x.summands()) {
        std::size_t q = 1;
        for (std::size_t i = 0; i < w.size(); ++i) q *= *p.n;
        t += q;
      }
      return t;
    };
    rows = size(p.w->carrier());
    cols = size(p.v->carrier());
    if (rows != cols) throw Error(Errc::shape, "identity target needs equal incarnated dimensions");
    return incarnation_preimage_space(*p.v, *p.w, *p.n, QMatrix::identity(rows), p.degree_bound);
  }
  std::optional<Rational> delta = p.delta;
  if (!delta && p.n) delta = Rational(*p.n);
  return current_morphism_space(*p.v, *p.w, {p.degree_bound, delta});
}

}  // namespace brauerlie
