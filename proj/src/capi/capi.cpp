#include "brauerlie/brauerlie.h"

#include <cstring>
#include <sstream>

#include "brauerlie/current/description.hpp"
#include "brauerlie/diagram/parser.hpp"
#include "brauerlie/equivariant/description.hpp"
#include "brauerlie/errors.hpp"
#include "brauerlie/incarnation/incarnation.hpp"
#include "brauerlie/repro.hpp"
#include "brauerlie/suites.hpp"
#include "bundled_data.hpp"

using namespace brauerlie;

struct bl_options {
  std::optional<Rational> delta;
  std::optional<int> n;
  std::optional<int> degree_bound;
  RenderFormat format = RenderFormat::text;
};

struct bl_morphism {
  DiagMorphism f;
};

struct bl_result {
  bool passed = false;
  std::string json, text;
};

namespace {

thread_local std::string last_error;
thread_local int last_position = -1;

bl_status code_of(Errc c) {
  switch (c) {
    case Errc::parse: return BL_ERR_PARSE;
    case Errc::type: return BL_ERR_TYPE;
    case Errc::orientation: return BL_ERR_ORIENTATION;
    case Errc::boundary: return BL_ERR_BOUNDARY;
    case Errc::flavor: return BL_ERR_FLAVOR;
    case Errc::unsupported_ring: return BL_ERR_UNSUPPORTED_RING;
    case Errc::dimension: return BL_ERR_DIMENSION;
    case Errc::not_idempotent: return BL_ERR_NOT_IDEMPOTENT;
    case Errc::shape: return BL_ERR_SHAPE;
    case Errc::validation: return BL_ERR_VALIDATION;
    case Errc::precondition: return BL_ERR_PRECONDITION;
    case Errc::unspecialized_delta: return BL_ERR_UNSPECIALIZED_DELTA;
    case Errc::io: return BL_ERR_IO;
    case Errc::invalid_argument: return BL_ERR_INVALID_ARGUMENT;
  }
  return BL_ERR_INTERNAL;
}

template <class F>
bl_status guard(F&& body) {
  last_error.clear();
  last_position = -1;
  try {
    body();
    return BL_OK;
  } catch (const ParseError& e) {
    last_error = e.what();
    last_position = static_cast<int>(e.position());
    return code_of(e.code());
  } catch (const Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const Json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return BL_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BL_ERR_INTERNAL;
  }
}

bl_status null_arg(const char* what) {
  last_error = std::string(what) + " must not be null";
  last_position = -1;
  return BL_ERR_INVALID_ARGUMENT;
}

const bl_options& opts(const bl_options* o) {
  static const bl_options defaults;
  return o ? *o : defaults;
}

int degree_bound(const bl_options& o, int fallback = 2) { return o.degree_bound.value_or(fallback); }

std::string report_text(const Report& r, const std::string& prefix = {}) {
  std::ostringstream os;
  for (const auto& e : r.entries()) {
    os << (e.passed ? "PASS " : "FAIL ") << prefix << e.identity;
    if (!e.detail.empty()) os << " (" << e.detail << ")";
    os << "\n";
  }
  return os.str();
}

bl_result* make_result(bool passed, const Json& j, std::string text) {
  auto* r = new bl_result;
  r->passed = passed;
  r->json = j.dump(2) + "\n";
  r->text = std::move(text);
  return r;
}

Json suite_json(const std::string& suite, const Report& r, Json extra = Json::object()) {
  Json j;
  j["suite"] = suite;
  for (auto& [k, v] : extra.items()) j[k] = v;
  j["passed"] = r.passed();
  j["total"] = r.size();
  j["failures"] = r.failures();
  j["checks"] = r.to_json();
  return j;
}

std::string render_for(const DiagMorphism& f, const bl_options& o) {
  DiagMorphism g = o.delta ? specialize(f, *o.delta) : f;
  return render(g, o.format);
}

}  // namespace

extern "C" {

const char* bl_version(void) { return "0.1.0"; }

const char* bl_status_name(bl_status s) {
  switch (s) {
    case BL_OK: return "ok";
    case BL_ERR_PARSE: return "parse";
    case BL_ERR_TYPE: return "type";
    case BL_ERR_ORIENTATION: return "orientation";
    case BL_ERR_BOUNDARY: return "boundary";
    case BL_ERR_FLAVOR: return "flavor";
    case BL_ERR_UNSUPPORTED_RING: return "unsupported_ring";
    case BL_ERR_DIMENSION: return "dimension";
    case BL_ERR_NOT_IDEMPOTENT: return "not_idempotent";
    case BL_ERR_SHAPE: return "shape";
    case BL_ERR_VALIDATION: return "validation";
    case BL_ERR_PRECONDITION: return "precondition";
    case BL_ERR_UNSPECIALIZED_DELTA: return "unspecialized_delta";
    case BL_ERR_IO: return "io";
    case BL_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case BL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* bl_last_error(void) { return last_error.c_str(); }
int bl_last_error_position(void) { return last_position; }

bl_options* bl_options_new(void) { return new (std::nothrow) bl_options; }
void bl_options_free(bl_options* o) { delete o; }

bl_status bl_options_set_delta(bl_options* o, const char* delta) {
  if (!o) return null_arg("options");
  if (!delta) return null_arg("delta");
  return guard([&] {
    if (std::strcmp(delta, "generic") == 0) o->delta.reset();
    else o->delta = Rational::parse(delta);
  });
}

bl_status bl_options_set_n(bl_options* o, int n) {
  if (!o) return null_arg("options");
  return guard([&] {
    if (n < 1) throw Error(Errc::invalid_argument, "n must be positive");
    o->n = n;
  });
}

bl_status bl_options_set_degree_bound(bl_options* o, int d) {
  if (!o) return null_arg("options");
  return guard([&] {
    if (d < 0) throw Error(Errc::invalid_argument, "degree bound must be non-negative");
    o->degree_bound = d;
  });
}

bl_status bl_options_set_format(bl_options* o, const char* format) {
  if (!o) return null_arg("options");
  if (!format) return null_arg("format");
  return guard([&] { o->format = render_format_from_name(format); });
}

bl_status bl_morphism_parse(const char* expr, bl_morphism** out) {
  if (!expr) return null_arg("expression");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] { *out = new bl_morphism{parse_expr(expr)}; });
}

bl_status bl_morphism_compose(const bl_morphism* f, const bl_morphism* g, bl_morphism** out) {
  if (!f || !g || !out) return null_arg("argument");
  *out = nullptr;
  return guard([&] { *out = new bl_morphism{compose(f->f, g->f)}; });
}

bl_status bl_morphism_tensor(const bl_morphism* f, const bl_morphism* g, bl_morphism** out) {
  if (!f || !g || !out) return null_arg("argument");
  *out = nullptr;
  return guard([&] { *out = new bl_morphism{tensor(f->f, g->f)}; });
}

bl_status bl_morphism_equal(const bl_morphism* f, const bl_morphism* g, int* out) {
  if (!f || !g || !out) return null_arg("argument");
  return guard([&] { *out = f->f == g->f ? 1 : 0; });
}

bl_status bl_morphism_render(const bl_morphism* f, const bl_options* o, char** out) {
  if (!f || !out) return null_arg("argument");
  *out = nullptr;
  return guard([&] {
    std::string s = render_for(f->f, opts(o));
    *out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!*out) throw std::bad_alloc();
    std::memcpy(*out, s.c_str(), s.size() + 1);
  });
}

void bl_morphism_free(bl_morphism* f) { delete f; }
void bl_string_free(char* s) { std::free(s); }

bl_status bl_normalize(const char* expr, const bl_options* o, bl_result** out) {
  if (!expr) return null_arg("expression");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    const bl_options& op = opts(o);
    DiagMorphism f = parse_expr(expr);
    if (op.delta) f = specialize(f, *op.delta);
    Json j;
    j["expression"] = expr;
    j["delta"] = op.delta ? Json(op.delta->str()) : Json("generic");
    j["normal_form"] = to_json(f);
    std::string text = render(f, op.format == RenderFormat::json ? RenderFormat::text : op.format);
    if (text.empty() || text.back() != '\n') text += "\n";
    *out = make_result(true, j, text);
  });
}

bl_status bl_verify(const char* suite, const char* input_json, const bl_options* o, bl_result** out) {
  if (!suite) return null_arg("suite");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    const bl_options& op = opts(o);
    std::string s = suite;
    if (s == "lie-axioms") {
      Report r = lie_axioms_suite();
      *out = make_result(r.passed(), suite_json(s, r, {{"delta", "generic"}}), report_text(r));
    } else if (s == "current") {
      int d = degree_bound(op);
      Report r;
      if (input_json) {
        Json j = Json::parse(input_json);
        if (op.degree_bound) j["degree_bound"] = d;
        CurrentProblem p = problem_from_json(j);
        d = p.degree_bound;
        r.merge(check_current_compatibility(*p.v, d), "V");
        if (j.contains("W")) r.merge(check_current_compatibility(*p.w, d), "W");
      } else {
        r = current_construction_suite(d);
      }
      *out = make_result(r.passed(), suite_json(s, r, {{"degree_bound", d}}), report_text(r));
    } else if (s == "equivariant") {
      Json j = Json::parse(input_json ? input_json : kBundledEquivariant);
      EquivariantSuiteResult res = run_equivariant_suite(equivariant_from_json(j));
      *out = make_result(res.report.passed(), suite_json(s, res.report, {{"summary", res.summary}}), report_text(res.report));
    } else {
      throw Error(Errc::invalid_argument, "unknown suite '" + s + "' (expected lie-axioms, current or equivariant)");
    }
  });
}

bl_status bl_kernel(const char* word, const bl_options* o, bl_result** out) {
  if (!word) return null_arg("word");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    const bl_options& op = opts(o);
    if (!op.n) throw Error(Errc::invalid_argument, "kernel needs --n");
    Word w = Word::parse(word);
    if (op.delta && *op.delta != Rational(*op.n)) throw Error(Errc::precondition, "delta must equal n for an incarnation");
    Flavor fl = w.flavor().value_or(Flavor::oriented);
    KernelResult k = kernel_of_incarnation(w, w, {*op.n, fl});
    std::ostringstream os;
    os << "End(" << w.str() << ") at n = " << *op.n << ": hom dimension " << k.hom_dimension() << ", rank " << k.rank
       << ", kernel dimension " << k.kernel_dimension() << "\n";
    *out = make_result(true, k.to_json(), os.str());
  });
}

bl_status bl_solve(const char* problem_json, const bl_options* o, bl_result** out) {
  if (!problem_json) return null_arg("problem");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    const bl_options& op = opts(o);
    Json j = Json::parse(problem_json);
    if (op.degree_bound) j["degree_bound"] = *op.degree_bound;
    if (op.delta) j["delta"] = op.delta->str();
    if (op.n) j["n"] = *op.n;
    CurrentProblem p = problem_from_json(j);
    MorphismSpaceResult r = solve_problem(p);
    Json res = r.to_json();
    std::ostringstream os;
    if (r.consistent()) {
      os << "affine dimension " << r.dimension() << " (degree bound " << r.degree_bound << ")\n";
      std::string f = render(r.morphism(*r.space.particular).block(0, 0), RenderFormat::text);
      if (r.source.size() == 1 && r.target.size() == 1) os << "particular solution:\n" << f << (f.empty() || f.back() != '\n' ? "\n" : "");
      if (r.source.size() == 1 && r.target.size() == 1) res["particular_morphism"] = to_json(r.morphism(*r.space.particular).block(0, 0));
    } else {
      os << "no solution (degree bound " << r.degree_bound << ")\n";
    }
    *out = make_result(r.consistent(), res, os.str());
  });
}

bl_status bl_reproduce(const char* id, const bl_options* o, bl_result** out) {
  if (!id) return null_arg("id");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    const bl_options& op = opts(o);
    ReproOptions ro;
    ro.degree_bound = degree_bound(op);
    std::vector<ReproResult> rs;
    if (std::strcmp(id, "all") == 0) rs = run_all_reproductions(ro);
    else rs.push_back(run_reproduction(id, ro));
    Json arr = Json::array();
    std::ostringstream os;
    bool ok = true;
    for (const auto& r : rs) {
      arr.push_back(r.to_json());
      ok = ok && r.report.passed();
      for (const auto& e : r.report.entries())
        os << (e.passed ? "PASS " : "FAIL ") << r.id << " " << e.identity << ": " << e.detail << "\n";
    }
    Json j;
    j["degree_bound"] = ro.degree_bound;
    j["passed"] = ok;
    j["reproductions"] = arr;
    *out = make_result(ok, j, os.str());
  });
}

int bl_result_passed(const bl_result* r) { return r && r->passed ? 1 : 0; }
const char* bl_result_json(const bl_result* r) { return r ? r->json.c_str() : ""; }
const char* bl_result_text(const bl_result* r) { return r ? r->text.c_str() : ""; }
void bl_result_free(bl_result* r) { delete r; }

}  // extern "C"
