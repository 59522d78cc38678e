#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qc/linalg.hpp"

using qc::Rational;

TEST_CASE("normalization and basic arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -3).den() == 1);

  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7) >= Rational(7));
  CHECK(qc::abs(Rational(-5, 3)) == Rational(5, 3));
}

TEST_CASE("floor and ceil") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(4).floor() == 4);
  CHECK(Rational(4).ceil() == 4);
  CHECK(Rational(12).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-4/6") == Rational(-2, 3));
  CHECK(Rational::parse(" 5/10 ") == Rational(1, 2));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK(Rational(5, 4).str() == "5/4");
  CHECK(Rational(-6).str() == "-6");
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), std::overflow_error);
}

TEST_CASE("field axioms on random small rationals") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::int64_t> num(-40, 40);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!c.is_zero()) CHECK((a / c) * c == a);
  }
}

TEST_CASE("exact linear solve through Eigen") {
  qc::RatMat A(2, 2);
  A << Rational(1), Rational(2), Rational(3), Rational(5);
  qc::RatVec b(2);
  b << Rational(1), Rational(2);
  auto x = qc::solve_consistent(A, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(-1));
  CHECK((*x)[1] == Rational(1));

  qc::RatMat S(2, 1);
  S << Rational(1), Rational(1);
  qc::RatVec off(2);
  off << Rational(1), Rational(0);
  CHECK_FALSE(qc::solve_consistent(S, off).has_value());
}

TEST_CASE("primitive integer scaling") {
  qc::RatVec v(3);
  v << Rational(1, 2), Rational(-3, 2), Rational(0);
  qc::RatVec p = qc::primitive_integer_scale(v);
  CHECK(p[0] == Rational(1));
  CHECK(p[1] == Rational(-3));
  CHECK(p[2] == Rational(0));

  qc::RatVec w(2);
  w << Rational(4), Rational(6);
  qc::RatVec q = qc::primitive_integer_scale(w);
  CHECK(q[0] == Rational(2));
  CHECK(q[1] == Rational(3));

  qc::RatVec z = qc::RatVec::Zero(2);
  CHECK_THROWS_AS(qc::primitive_integer_scale(z), qc::SpecError);
}
