#include "brauerlie/current/current.hpp"
#include "brauerlie/errors.hpp"
#include "brauerlie/repro.hpp"
#include "doctest.h"

using namespace brauerlie;

TEST_CASE("manifest") {
  const auto& m = reproduction_manifest();
  CHECK(m.size() == 5);
  CHECK(manifest_entry("kernel10").expected[1].value == 10);
  CHECK_THROWS_AS(manifest_entry("kernel11"), Error);
  for (const auto& e : m)
    for (const auto& x : e.expected) CHECK((x.kind == "claim" || x.kind == "consistency"));
}

TEST_CASE("every reproduction passes") {
  for (const auto& r : run_all_reproductions()) {
    INFO(r.id);
    CHECK(r.report.passed());
    auto j = r.to_json();
    CHECK(j["passed"] == true);
    CHECK(j.dump() == r.to_json().dump());
  }
}

TEST_CASE("c does not depend on a and b") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 5}, {-2, 3}, {7, 0}}) {
    ReproOptions o;
    o.a = Rational(a);
    o.b = Rational(b);
    auto r = run_reproduction("c-minus-1", o);
    CHECK(r.computed["distinct_c"] == "-1");
    CHECK(r.report.passed());
  }
  ReproOptions same;
  same.a = same.b = Rational(4);
  auto r = run_reproduction("c-minus-1", same);
  CHECK(r.computed["distinct_c"].is_null());
  CHECK(!r.report.passed());
  CHECK(r.report.find("equal_dimension")->passed);
}

TEST_CASE("antisymmetrizer coefficient") {
  Word w = Word::parse("uuu");
  CHECK(antisymmetrizer_coefficient(KarMorphism::plain(identity(w) + DeltaPoly(Rational(3, 2)) * antisymmetrizer(3))) ==
        Rational(3, 2));
  CHECK(antisymmetrizer_coefficient(KarMorphism::plain(identity(w))) == Rational(0));
  auto x = tensor(crossing(Letter::up, Letter::up), identity(Word::parse("u")));
  CHECK(!antisymmetrizer_coefficient(KarMorphism::plain(identity(w) + x)).has_value());
}
