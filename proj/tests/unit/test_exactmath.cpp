#include <random>

#include "brauerlie/exactmath/matrix.hpp"
#include "doctest.h"

using namespace brauerlie;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

QMatrix qm(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().push_back(Rational(x));
  }
  return QMatrix::from_rows(r);
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(q(2, 4).str() == "1/2");
  CHECK(q(3, -6).str() == "-1/2");
  CHECK(q(0, 5).str() == "0");
  CHECK(Rational::parse("-6/4") == q(-3, 2));
  CHECK(Rational::parse(" 7 ") == q(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS(q(0).inverse());
  CHECK(binomial(5, 2) == q(10));
  CHECK(binomial(3, 5) == q(0));
  CHECK(binomial(3, -1) == q(0));
}

TEST_CASE("rational field axioms on random inputs") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == q(1));
  }
}

TEST_CASE("delta polynomials") {
  DeltaPoly d = DeltaPoly::delta_power(1);
  CHECK(specialize_delta(d * d, q(2)) == q(4));
  CHECK(specialize_delta(DeltaPoly(q(7, 3)), q(-5)) == q(7, 3));
  CHECK(specialize_delta(d + DeltaPoly(1), q(2)) == q(3));
  CHECK((d - d).is_zero());
  CHECK((d * d - d * d).coefficients().empty());
  DeltaPoly p = DeltaPoly(1) + DeltaPoly::delta_power(1, q(-2)) + DeltaPoly::delta_power(2, q(1, 2));
  CHECK(p.str() == "1 + -2*delta + 1/2*delta^2");
  CHECK(DeltaPoly::parse(p.str()) == p);
  CHECK(DeltaPoly::parse("delta") == d);
  CHECK(DeltaPoly::parse("3 delta^2 - 1") == DeltaPoly::delta_power(2, q(3)) - DeltaPoly(1));
  CHECK(DeltaPoly::parse("0").is_zero());
  CHECK(DeltaPoly().str() == "0");
  CHECK_THROWS_AS(DeltaPoly::parse("delta^"), ParseError);
  CHECK_THROWS_AS(DeltaPoly::parse("x"), ParseError);
}

TEST_CASE("cyclotomic polynomials") {
  auto phi = [](unsigned m) {
    std::vector<long> out;
    for (auto& c : cyclotomic_polynomial(m)) out.push_back(c.to_long());
    return out;
  };
  CHECK(phi(1) == std::vector<long>{-1, 1});
  CHECK(phi(2) == std::vector<long>{1, 1});
  CHECK(phi(4) == std::vector<long>{1, 0, 1});
  CHECK(phi(6) == std::vector<long>{1, -1, 1});
  CHECK(phi(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(8) == 4);
}

TEST_CASE("cyclotomic arithmetic") {
  auto i = CycloNumber::root_of_unity(4, 1);
  CHECK(i * i == CycloNumber(q(-1)));
  CHECK(i.pow(4) == CycloNumber(q(1)));
  CHECK(i.inverse() == -i);
  auto w = CycloNumber::root_of_unity(3, 1);
  CHECK(w * w + w + CycloNumber(1) == CycloNumber(0));
  CHECK(CycloNumber::root_of_unity(2, 1) == CycloNumber(-1));
  CHECK(CycloNumber::root_of_unity(6, 2) == w);
  CHECK(CycloNumber::parse("1/2 + 3*z", 4) == CycloNumber(q(1, 2)) + CycloNumber(3) * i);
  CHECK_THROWS(CycloNumber(0).inverse());

  std::mt19937 rng(11);
  for (unsigned m : {1u, 2u, 3u, 4u, 5u, 8u, 12u}) {
    for (int t = 0; t < 40; ++t) {
      QPoly pa, pb;
      for (unsigned k = 0; k < euler_phi(m); ++k) {
        pa.push_back(random_rational(rng));
        pb.push_back(random_rational(rng));
      }
      CycloNumber a(m, pa), b(m, pb), c = a + b;
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK(a * a.inverse() == CycloNumber(1));
    }
  }
  // conductors 1 and 2 embed the rationals
  for (long n = -3; n <= 3; ++n) {
    CHECK(CycloNumber(2, {q(n, 5)}).to_rational() == q(n, 5));
    CHECK(CycloNumber(q(n, 7)).to_rational() == q(n, 7));
  }
}

TEST_CASE("rref rank and kernel") {
  auto r = rref(qm({{1, 2}, {2, 4}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(rank(QMatrix::identity(3)) == 3);
  CHECK(kernel_basis(QMatrix(2, 3)).size() == 3);
  CHECK(kernel_basis(QMatrix::identity(4)).empty());
  auto k = kernel_basis(qm({{1, 1}, {1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(!k[0][0].is_zero());
  CHECK_THROWS_AS(rref(DMatrix(2, 2)), Error);
  try {
    kernel_basis(DMatrix(1, 1));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_ring);
  }
}

TEST_CASE("rank plus nullity on random matrices") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> small(-2, 2);
  for (int t = 0; t < 50; ++t) {
    std::size_t rows = 1 + t % 5, cols = 1 + (t * 7) % 6;
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(small(rng));
    auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == cols);
    for (auto& v : ker)
      for (auto& x : m * v) CHECK(x.is_zero());
  }
}

TEST_CASE("affine solve") {
  auto s = solve_affine(QMatrix::identity(2), {q(3), q(5)});
  REQUIRE(s.consistent());
  CHECK(*s.particular == Vec<Rational>{q(3), q(5)});
  CHECK(s.basis.empty());

  s = solve_affine(qm({{1, 1}}), {q(2)});
  REQUIRE(s.consistent());
  CHECK(*s.particular == Vec<Rational>{q(2), q(0)});
  REQUIRE(s.basis.size() == 1);
  CHECK(s.basis[0][0] == -s.basis[0][1]);

  s = solve_affine(qm({{1}, {1}}), {q(0), q(1)});
  CHECK(!s.consistent());
  CHECK(s.basis.empty());

  CHECK_THROWS_AS(solve_affine(QMatrix::identity(2), {q(1)}), Error);

  std::mt19937 rng(5);
  std::uniform_int_distribution<long> small(-3, 3);
  for (int t = 0; t < 30; ++t) {
    QMatrix a(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = Rational(small(rng));
    Vec<Rational> x0{q(small(rng)), q(small(rng)), q(small(rng)), q(small(rng))};
    auto b = a * x0;
    auto sol = solve_affine(a, b);
    REQUIRE(sol.consistent());
    Vec<Rational> x = *sol.particular;
    for (std::size_t i = 0; i < sol.basis.size(); ++i)
      for (std::size_t j = 0; j < 4; ++j) x[j] += Rational(static_cast<long>(i + 2), 3) * sol.basis[i][j];
    CHECK(a * x == b);
  }
}

TEST_CASE("cyclotomic matrices") {
  auto i = CycloNumber::root_of_unity(4, 1);
  CMatrix m = CMatrix::from_rows({{CycloNumber(1), i}, {i, CycloNumber(-1)}});
  CHECK(rank(m) == 1);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  for (auto& x : m * k[0]) CHECK(x.is_zero());
}
