#include <cstring>
#include <string>

#include "json.hpp"

#include "brauerlie/brauerlie.h"
#include "doctest.h"

namespace {

struct Opts {
  bl_options* o = bl_options_new();
  ~Opts() { bl_options_free(o); }
};

struct Res {
  bl_result* r = nullptr;
  ~Res() { bl_result_free(r); }
  nlohmann::json json() const { return nlohmann::json::parse(bl_result_json(r)); }
};

std::string text(const Res& r) { return bl_result_text(r.r); }

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(bl_status_name(BL_OK)) == "ok");
  CHECK(std::string(bl_status_name(BL_ERR_ORIENTATION)) == "orientation");
  CHECK(std::string(bl_status_name(BL_ERR_UNSPECIALIZED_DELTA)) == "unspecialized_delta");
  CHECK(std::string(bl_status_name(static_cast<bl_status>(999))) == "unknown");
  CHECK(std::strlen(bl_version()) > 0);
}

TEST_CASE("options") {
  Opts o;
  CHECK(bl_options_set_delta(o.o, "2") == BL_OK);
  CHECK(bl_options_set_delta(o.o, "-3/4") == BL_OK);
  CHECK(bl_options_set_delta(o.o, "generic") == BL_OK);
  CHECK(bl_options_set_delta(o.o, "two") != BL_OK);
  CHECK(bl_options_set_delta(o.o, nullptr) == BL_ERR_INVALID_ARGUMENT);
  CHECK(bl_options_set_n(o.o, 0) == BL_ERR_INVALID_ARGUMENT);
  CHECK(bl_options_set_degree_bound(o.o, -1) == BL_ERR_INVALID_ARGUMENT);
  CHECK(bl_options_set_format(o.o, "tikz") == BL_OK);
  CHECK(bl_options_set_format(o.o, "svg") != BL_OK);
  CHECK(bl_options_set_n(nullptr, 2) == BL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("normalize") {
  Opts o;
  bl_options_set_delta(o.o, "2");
  Res r;
  REQUIRE(bl_normalize("cap(ud) ; cup(ud)", o.o, &r.r) == BL_OK);
  CHECK(text(r) == "2\n");
  CHECK(bl_result_passed(r.r) == 1);
  auto j = r.json();
  CHECK(j["delta"] == "2");
  CHECK(j["normal_form"]["terms"].size() == 1);

  Res a;
  REQUIRE(bl_normalize("asym(3)", nullptr, &a.r) == BL_OK);
  CHECK(a.json()["normal_form"]["terms"].size() == 6);
  CHECK(a.json()["delta"] == "generic");

  Res bad;
  CHECK(bl_normalize("cap(uu)", nullptr, &bad.r) == BL_ERR_ORIENTATION);
  CHECK(bad.r == nullptr);
  CHECK(std::strlen(bl_last_error()) > 0);

  CHECK(bl_normalize("id(u) ; ", nullptr, &bad.r) == BL_ERR_PARSE);
  CHECK(bl_last_error_position() >= 7);
  CHECK(bl_normalize("id(u) ; id(d)", nullptr, &bad.r) == BL_ERR_TYPE);
  // a successful call clears the error state
  Res ok;
  CHECK(bl_normalize("id(u)", nullptr, &ok.r) == BL_OK);
  CHECK(std::string(bl_last_error()).empty());
  CHECK(bl_last_error_position() == -1);
  CHECK(bl_normalize(nullptr, nullptr, &ok.r) == BL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("morphism handles") {
  bl_morphism *cap = nullptr, *cup = nullptr, *loop = nullptr, *x = nullptr;
  REQUIRE(bl_morphism_parse("cap(ud)", &cap) == BL_OK);
  REQUIRE(bl_morphism_parse("cup(ud)", &cup) == BL_OK);
  REQUIRE(bl_morphism_compose(cap, cup, &loop) == BL_OK);
  Opts o;
  bl_options_set_delta(o.o, "5");
  char* s = nullptr;
  REQUIRE(bl_morphism_render(loop, o.o, &s) == BL_OK);
  CHECK(std::string(s).find('5') != std::string::npos);
  bl_string_free(s);
  CHECK(bl_morphism_compose(cup, cup, &x) == BL_ERR_BOUNDARY);
  CHECK(x == nullptr);
  bl_morphism* t = nullptr;
  REQUIRE(bl_morphism_tensor(cap, cup, &t) == BL_OK);
  int eq = -1;
  CHECK(bl_morphism_equal(cap, cap, &eq) == BL_OK);
  CHECK(eq == 1);
  CHECK(bl_morphism_equal(cap, t, &eq) == BL_OK);
  CHECK(eq == 0);
  CHECK(bl_morphism_parse("cap(uu)", &x) == BL_ERR_ORIENTATION);
  for (auto* m : {cap, cup, loop, t}) bl_morphism_free(m);
  bl_morphism_free(nullptr);
}

TEST_CASE("verify") {
  Res l;
  REQUIRE(bl_verify("lie-axioms", nullptr, nullptr, &l.r) == BL_OK);
  CHECK(bl_result_passed(l.r));
  CHECK(l.json()["failures"] == 0);
  CHECK(l.json()["delta"] == "generic");

  Opts o;
  bl_options_set_degree_bound(o.o, 3);
  Res c;
  REQUIRE(bl_verify("current", nullptr, o.o, &c.r) == BL_OK);
  CHECK(bl_result_passed(c.r));
  CHECK(c.json()["degree_bound"] == 3);

  Res e;
  REQUIRE(bl_verify("equivariant", nullptr, nullptr, &e.r) == BL_OK);
  CHECK(bl_result_passed(e.r));
  CHECK(e.json()["summary"]["map_algebra"]["dimension"] == 6);

  Res bad;
  CHECK(bl_verify("sheaves", nullptr, nullptr, &bad.r) == BL_ERR_INVALID_ARGUMENT);
  CHECK(bl_verify("equivariant", "{not json", nullptr, &bad.r) == BL_ERR_INVALID_ARGUMENT);
  CHECK(bad.r == nullptr);

  // a failing explicit module: passes the call, fails the checks
  const char* broken = R"J({"lie": "oriented-gl", "degree_bound": 2,
    "V": {"rule": "explicit", "carrier": "u", "actions": {"0": "id(u) @ cap(du)", "1": "2 * id(u) @ cap(du)"}}})J";
  Res f;
  REQUIRE(bl_verify("current", broken, nullptr, &f.r) == BL_OK);
  CHECK(bl_result_passed(f.r) == 0);
  CHECK(f.json()["failures"].get<int>() > 0);
}

TEST_CASE("kernel") {
  Opts o;
  Res r;
  CHECK(bl_kernel("uuuu", o.o, &r.r) == BL_ERR_INVALID_ARGUMENT);
  bl_options_set_n(o.o, 2);
  REQUIRE(bl_kernel("uuuu", o.o, &r.r) == BL_OK);
  CHECK(r.json()["kernel_dimension"] == 10);
  CHECK(r.json()["rank"] == 14);
  Res s;
  REQUIRE(bl_kernel("ss", o.o, &s.r) == BL_OK);
  CHECK(s.json()["kernel_dimension"] == 0);
  bl_options_set_delta(o.o, "3");
  Res bad;
  CHECK(bl_kernel("uu", o.o, &bad.r) == BL_ERR_PRECONDITION);
  CHECK(bl_kernel("ux", nullptr, &bad.r) != BL_OK);
}

TEST_CASE("solve") {
  const char* problem = R"J({"lie": "oriented-gl",
    "V": {"rule": "induced", "base": {"module": "canonical", "word": "uuu"}, "endo": "id(uuu)"},
    "W": {"rule": "induced", "base": {"module": "canonical", "word": "uuu"}, "endo": "id(uuu) + 1 * asym(3)"},
    "target": "identity", "n": 2})J";
  Res r;
  REQUIRE(bl_solve(problem, nullptr, &r.r) == BL_OK);
  CHECK(bl_result_passed(r.r));
  CHECK(r.json()["dimension"] == 0);
  CHECK(r.json()["degree_bound"] == 2);

  Opts o;
  bl_options_set_degree_bound(o.o, 1);
  Res d1;
  REQUIRE(bl_solve(problem, o.o, &d1.r) == BL_OK);
  CHECK(d1.json()["degree_bound"] == 1);

  bl_options_set_delta(o.o, "3");
  Res bad;
  CHECK(bl_solve(problem, o.o, &bad.r) == BL_ERR_PRECONDITION);
  CHECK(bl_solve("[]", nullptr, &bad.r) != BL_OK);
  CHECK(bl_solve(nullptr, nullptr, &bad.r) == BL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("reproduce") {
  Res all;
  REQUIRE(bl_reproduce("all", nullptr, &all.r) == BL_OK);
  CHECK(bl_result_passed(all.r));
  CHECK(all.json()["reproductions"].size() == 5);
  CHECK(text(all).find("expected 10, computed 10") != std::string::npos);
  Res one;
  REQUIRE(bl_reproduce("so-image", nullptr, &one.r) == BL_OK);
  CHECK(one.json()["reproductions"][0]["id"] == "so-image");
  Res bad;
  CHECK(bl_reproduce("kernel11", nullptr, &bad.r) == BL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("null results are safe") {
  CHECK(bl_result_passed(nullptr) == 0);
  CHECK(std::string(bl_result_json(nullptr)).empty());
  CHECK(std::string(bl_result_text(nullptr)).empty());
  bl_result_free(nullptr);
  bl_options_free(nullptr);
}
