#include "brauerlie/repro.hpp"

#include "brauerlie/current/current.hpp"
#include "brauerlie/errors.hpp"
#include "brauerlie/incarnation/incarnation.hpp"

namespace brauerlie {
namespace {

Word W(const char* s) { return Word::parse(s); }

const std::vector<ManifestEntry> kManifest = {
    {"kernel10", "kernel of I_2 on End(uuuu)",
     {{"hom_dimension", 24, "consistency"}, {"kernel_dimension", 10, "claim"}, {"rank", 14, "consistency"}}},
    {"c-minus-1", "Curr(I_2)-preimages of the identity on uuu",
     {{"distinct_dimension", 0, "claim"}, {"distinct_c", "-1", "claim"}, {"equal_dimension", 1, "claim"}}},
    {"dims-6-4", "Curr(I_2)-preimage dimensions on uuuu",
     {{"k2_dimension", 6, "claim"}, {"k2_prime_dimension", 4, "claim"}}},
    {"right-inverse", "(1/3)(cup ⊗ id) is a right inverse of the canonical action on uuu",
     {{"delta_2", true, "claim"}, {"generic_delta", true, "consistency"}, {"coefficient_one_residual", "2*id", "consistency"}}},
    {"so-image", "I'_n image of the unoriented Lie object",
     {{"skew_dimensions", Json::array({1, 3, 6}), "consistency"}, {"commutator", true, "claim"}}},
};

CurrentPtr induced(const Word& w, const DiagMorphism& endo) {
  return current_induced(canonical_module(gl_object(), w), KarMorphism::plain(endo));
}

Json kernel10(const ReproOptions&) {
  auto k = kernel_of_incarnation(W("uuuu"), W("uuuu"), {2, Flavor::oriented});
  return {{"hom_dimension", k.hom_dimension()}, {"kernel_dimension", k.kernel_dimension()}, {"rank", k.rank}};
}

Json c_minus_1(const ReproOptions& o) {
  Word w = W("uuu");
  auto a3 = antisymmetrizer(3);
  auto v = induced(w, identity(w) + DeltaPoly(o.a) * a3);
  auto wd = induced(w, identity(w) + DeltaPoly(o.b) * a3);
  QMatrix id8 = QMatrix::identity(8);
  Json j;
  j["a"] = o.a.str();
  j["b"] = o.b.str();
  j["degree_bound"] = o.degree_bound;
  if (o.a != o.b) {
    auto r = incarnation_preimage_space(*v, *wd, 2, id8, o.degree_bound);
    j["distinct_dimension"] = r.consistent() ? Json(r.dimension()) : Json(nullptr);
    std::optional<Rational> c;
    if (r.consistent() && r.dimension() == 0) c = antisymmetrizer_coefficient(r.morphism(*r.space.particular));
    j["distinct_c"] = c ? Json(c->str()) : Json(nullptr);
  } else {
    j["distinct_dimension"] = nullptr;
    j["distinct_c"] = nullptr;
  }
  auto same = incarnation_preimage_space(*v, *v, 2, id8, o.degree_bound);
  j["equal_dimension"] = same.consistent() ? Json(same.dimension()) : Json(nullptr);
  return j;
}

Json dims_6_4(const ReproOptions& o) {
  Word w = W("uuuu");
  auto a3 = antisymmetrizer(3);
  auto k1 = tensor(a3, identity(W("u")));
  auto k2 = tensor(identity(W("u")), a3);
  auto k2p = compose(k1, tensor(identity(W("uu")), crossing(Letter::up, Letter::up)));
  auto v = induced(w, identity(w) + k1);
  QMatrix id16 = QMatrix::identity(16);
  auto r6 = incarnation_preimage_space(*v, *induced(w, identity(w) + k2), 2, id16, o.degree_bound);
  auto r4 = incarnation_preimage_space(*v, *induced(w, identity(w) + k2p), 2, id16, o.degree_bound);
  return {{"degree_bound", o.degree_bound},
          {"k2_dimension", r6.consistent() ? Json(r6.dimension()) : Json(nullptr)},
          {"k2_prime_dimension", r4.consistent() ? Json(r4.dimension()) : Json(nullptr)}};
}

Json right_inverse(const ReproOptions&) {
  Json j;
  j["delta_2"] = right_inverse_check(Rational(1, 3), Rational(2)).passed();
  j["generic_delta"] = right_inverse_check(Rational(1, 3), std::nullopt).passed();
  Report bad = right_inverse_check(Rational(1), Rational(2));
  KarMorphism two = DeltaPoly(2) * KarMorphism::identity(KarObject::of(W("uuu")));
  const auto& e = bad.entries().front();
  j["coefficient_one_residual"] = e.residual && *e.residual == to_json(two) ? Json("2*id") : (e.residual ? *e.residual : Json(nullptr));
  return j;
}

Json so_image(const ReproOptions&) {
  Json dims = Json::array();
  bool comm = true;
  for (int n = 2; n <= 4; ++n) {
    Report r = so_object_image_check(n);
    const auto* d = r.find("image dimension n(n-1)/2");
    dims.push_back(d && d->passed ? n * (n - 1) / 2 : -1);
    comm = comm && r.find("incarnated bracket is the commutator")->passed && r.find("I'(e) is the skew projector")->passed;
  }
  return {{"skew_dimensions", dims}, {"commutator", comm}};
}

}  // namespace

const std::vector<ManifestEntry>& reproduction_manifest() { return kManifest; }

const ManifestEntry& manifest_entry(const std::string& id) {
  for (const auto& e : kManifest)
    if (e.id == id) return e;
  throw Error(Errc::invalid_argument, "unknown reproduction '" + id + "'");
}

std::optional<Rational> antisymmetrizer_coefficient(const KarMorphism& f) {
  Word w = W("uuu");
  if (f.source().size() != 1 || f.target().size() != 1) return std::nullopt;
  DiagMorphism d = f.block(0, 0) - identity(w);
  DiagMorphism a3 = antisymmetrizer(3);
  if (d.is_zero()) return Rational(0);
  const auto& [m, c] = *a3.terms().begin();
  Rational coeff = d.coeff(m).constant() / c.constant();
  if (!(d == DeltaPoly(coeff) * a3)) return std::nullopt;
  return coeff;
}

ReproResult run_reproduction(const std::string& id, const ReproOptions& opt) {
  const ManifestEntry& entry = manifest_entry(id);
  ReproResult r;
  r.id = id;
  if (id == "kernel10") r.computed = kernel10(opt);
  else if (id == "c-minus-1") r.computed = c_minus_1(opt);
  else if (id == "dims-6-4") r.computed = dims_6_4(opt);
  else if (id == "right-inverse") r.computed = right_inverse(opt);
  else r.computed = so_image(opt);
  for (const auto& e : entry.expected) {
    Json got = r.computed.contains(e.key) ? r.computed.at(e.key) : Json(nullptr);
    r.report.add(e.key, got == e.value, "expected " + e.value.dump() + ", computed " + got.dump() + " (" + e.kind + ")");
  }
  return r;
}

std::vector<ReproResult> run_all_reproductions(const ReproOptions& opt) {
  std::vector<ReproResult> out;
  for (const auto& e : kManifest) out.push_back(run_reproduction(e.id, opt));
  return out;
}

Json ReproResult::to_json() const {
  const ManifestEntry& entry = manifest_entry(id);
  Json j;
  j["id"] = id;
  j["description"] = entry.description;
  Json exp = Json::object();
  for (const auto& e : entry.expected) exp[e.key] = {{"value", e.value}, {"kind", e.kind}};
  j["expected"] = exp;
  j["computed"] = computed;
  j["passed"] = report.passed();
  j["checks"] = report.to_json();
  return j;
}

}  // namespace brauerlie
