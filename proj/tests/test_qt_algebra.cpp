#include <random>

#include <doctest.h>

#include "sqpaths/qt_algebra.hpp"

using namespace sqpaths;

namespace {

QTPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> exp(-2, 3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  QTPoly p;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) {
    Rational c(coeff(rng), den(rng));
    c.canonicalize();
    p.add_term(c, {exp(rng), exp(rng)});
  }
  return p;
}

QTPoly poly(std::initializer_list<std::tuple<long, int, int>> terms) {
  QTPoly p;
  for (const auto& [c, a, b] : terms) p.add_term(Rational(c), {a, b});
  return p;
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_int(1) == QTPoly(1));
  CHECK(q_int(3) == poly({{1, 0, 0}, {1, 1, 0}, {1, 2, 0}}));
  CHECK_THROWS_AS(q_int(0), std::invalid_argument);
  CHECK_THROWS_AS(q_int(-2), std::invalid_argument);
  CHECK(q_factorial(3) == q_int(1) * q_int(2) * q_int(3));
  CHECK(q_pochhammer(2) == (QTPoly(1) - QTPoly::q()) * (QTPoly(1) - QTPoly::q().pow(2)));

  const QTRatio r(q_int(5), q_int(3));
  CHECK(r.num() * poly({{1, 0, 0}, {1, 1, 0}, {1, 2, 0}}) == r.den() * poly({{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {1, 4, 0}}));
}

TEST_CASE("q-integer divisibility") {
  for (int k = 1; k <= 8; ++k) {
    for (int m = 1; m <= 8; ++m) {
      const auto quotient = exact_divide(q_int(m * k), q_int(k));
      REQUIRE(quotient.has_value());
      // [mk]/[k] = 1 + q^k + ... + q^((m-1)k)
      QTPoly expected;
      for (int i = 0; i < m; ++i) expected.add_term(1, {i * k, 0});
      CHECK(*quotient == expected);
    }
  }
  CHECK_FALSE(exact_divide(q_int(5), q_int(2)).has_value());
}

TEST_CASE("ratio equality") {
  CHECK(ratio_eq(QTRatio(QTPoly::q()), QTRatio(QTPoly::q().pow(2), QTPoly::q())));
  CHECK(ratio_eq(QTRatio(q_int(4), q_int(2)), QTRatio(poly({{1, 0, 0}, {1, 2, 0}}))));
  CHECK_FALSE(ratio_eq(QTRatio(1), QTRatio(QTPoly::q())));
  CHECK_THROWS_AS(QTRatio(QTPoly(1), QTPoly()), std::domain_error);

  // Unreduced quotients compare as rational functions.
  const QTRatio a(QTPoly(1), QTPoly(1) - QTPoly::q());
  const QTRatio b(QTPoly(1) + QTPoly::q(), QTPoly(1) - QTPoly::q().pow(2));
  CHECK(ratio_eq(a, b));
  CHECK(ratio_eq(a - b, QTRatio(0)));
  CHECK(ratio_eq(a * QTRatio(QTPoly(1) - QTPoly::q()), QTRatio(1)));
}

TEST_CASE("canonical strings") {
  CHECK(QTPoly().to_string() == "0");
  CHECK(poly({{1, 0, 0}, {1, 1, 0}, {1, 1, 2}}).to_string() == "1 + q + q*t^2");
  CHECK(poly({{2, 1, 2}, {-1, -1, 0}}).to_string() == "-q^-1 + 2*q*t^2");
  CHECK(poly({{-1, 0, 0}}).to_string() == "-1");
  QTPoly half;
  half.add_term(Rational(1, 2), {0, 3});
  CHECK(half.to_string() == "1/2*t^3");
  CHECK(QTRatio(QTPoly::q(), q_int(2)).to_string() == "(q)/(1 + q)");
  CHECK(poch_zq(2).to_string() == "1 + (-1 - q)*z + q*z^2");
}

TEST_CASE("q,z-Pochhammer") {
  CHECK(equivalent(poch_zq(0), ZPoly(1)));
  CHECK(equivalent(poch_zq(1), ZPoly(1) - ZPoly::z()));
  ZPoly two;
  two.add_term(1, 0);
  two.add_term(QTRatio(-(QTPoly(1) + QTPoly::q())), 1);
  two.add_term(QTRatio(QTPoly::q()), 2);
  CHECK(equivalent(poch_zq(2), two));
}

TEST_CASE("ring axioms on random operands") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 200; ++trial) {
    const QTPoly a = random_poly(rng);
    const QTPoly b = random_poly(rng);
    const QTPoly c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a + (-a) == QTPoly());
    CHECK(a * QTPoly(1) == a);
    // Evaluation is a ring homomorphism.
    const Rational q(3, 2);
    const Rational t(-2, 5);
    CHECK((a * b).evaluate(q, t) == a.evaluate(q, t) * b.evaluate(q, t));
    const QTPoly product = a * b;
    for (const auto& [e, coeff] : product.terms()) CHECK(coeff != 0);
  }
}

TEST_CASE("ZPoly product commutes with evaluation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> zexp(-2, 3);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    ZPoly a;
    ZPoly b;
    for (int i = 0; i < 3; ++i) {
      a.add_term(QTRatio(random_poly(rng), QTPoly(1) + QTPoly::q()), zexp(rng));
      b.add_term(QTRatio(random_poly(rng)), zexp(rng));
    }
    Rational z(num(rng), den(rng));
    z.canonicalize();
    if (z == 0) z = 1;
    CHECK(ratio_eq((a * b).evaluate(z), a.evaluate(z) * b.evaluate(z)));
    CHECK(ratio_eq((a + b).evaluate(z), a.evaluate(z) + b.evaluate(z)));
  }
}

TEST_CASE("ZPoly degrees and z-freeness") {
  ZPoly p = ZPoly::monomial(QTRatio(2), -3) + ZPoly::monomial(QTRatio(1), 2);
  CHECK(p.min_degree() == -3);
  CHECK(p.max_degree() == 2);
  CHECK_FALSE(p.is_z_free());
  CHECK(ZPoly(5).is_z_free());
  CHECK((p - p).is_zero());
}
