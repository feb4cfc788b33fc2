#include <random>

#include <doctest.h>

#include "sqpaths/symfunc.hpp"

using namespace sqpaths;

namespace {

ZPoly c(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return ZPoly(QTRatio(QTPoly(r)));
}

PExpansion p(Partition lambda) { return PExpansion::power(std::move(lambda)); }

SubsetMask full(int n) { return n <= 1 ? 0 : (SubsetMask{1} << (n - 1)) - 1; }

QSymF indicator(SubsetMask s, int n) {
  QSymF f(n);
  f.add(s, QTPoly(1));
  return f;
}

PExpansion random_expansion(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> num(-3, 3);
  PExpansion f;
  for (int i = 0; i < 3; ++i) {
    const auto parts = partitions_of(deg(rng));
    const Partition& lambda = parts[rng() % parts.size()];
    ZPoly coeff = c(num(rng)) + ZPoly::monomial(QTRatio(QTPoly::q()), static_cast<int>(rng() % 3));
    f.add(lambda, coeff);
  }
  return f;
}

// The defining expansion sum_k (z;q)_k/(q;q)_k E_{n,k}, rebuilt from the solution.
PExpansion reassemble(const std::vector<PExpansion>& e) {
  PExpansion out;
  for (std::size_t k = 1; k <= e.size(); ++k) {
    const int kk = static_cast<int>(k);
    out += e[k - 1].scaled(poch_zq(kk).scaled(QTRatio(QTPoly(1), q_pochhammer(kk))));
  }
  return out;
}

}  // namespace

TEST_CASE("partitions and compositions") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == counts[n]);
  CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  for (int n = 1; n <= 8; ++n) CHECK(compositions_of(n).size() == (std::size_t{1} << (n - 1)));
  CHECK(compositions_of(4, 2).size() == 3);
  CHECK(z_lambda({2, 1, 1}) == 4);
  CHECK(z_lambda({3, 3}) == 18);
  CHECK(size_of({3, 2, 2}) == 7);
}

TEST_CASE("Newton expansions") {
  CHECK(equivalent(e_in_p(1), p({1})));
  CHECK(equivalent(h_in_p(1), p({1})));
  CHECK(equivalent(h_in_p(2), p({1, 1}).scaled(c(1, 2)) + p({2}).scaled(c(1, 2))));
  CHECK(equivalent(e_in_p(2), p({1, 1}).scaled(c(1, 2)) - p({2}).scaled(c(1, 2))));
  CHECK(equivalent(p_pure(3), p({3})));
  CHECK(equivalent(h_in_p(0), PExpansion::one()));
  CHECK_THROWS_AS(e_in_p(9), std::invalid_argument);
  CHECK_THROWS_AS(e_in_p(0), std::invalid_argument);
  CHECK(equivalent(p({2}) * p({3, 1}), p({3, 2, 1})));
  CHECK_THROWS_AS(PExpansion().add({1, 2}, ZPoly(1)), std::invalid_argument);
}

TEST_CASE("plethystic substitutions") {
  AlphabetRule unit{AlphabetRule::Kind::kScale, std::vector<ZPoly>(4, ZPoly(1))};
  const PExpansion f = e_in_p(4);
  CHECK(equivalent(pleth_apply(f, unit), f));

  // p_1[X - (1 - 1/q)/z] = p_1 - (1 - q^-1) z^-1
  const QTPoly shift = QTPoly(1) - QTPoly::monomial(1, -1, 0);
  CHECK(equivalent(pleth_apply(p({1}), creation_shift_rule(1)),
                   p({1}) - PExpansion::one().scaled(ZPoly::monomial(QTRatio(shift), -1))));

  // e_1[X (1 - z)/(1 - q)] = p_1 (1 - z)/(1 - q)
  const ZPoly scale = (ZPoly(1) - ZPoly::z()).scaled(QTRatio(QTPoly(1), QTPoly(1) - QTPoly::q()));
  CHECK(equivalent(pleth_apply(e_in_p(1), z_scale_rule(1)), p({1}).scaled(scale)));

  CHECK_THROWS_AS(pleth_apply(p({3}), z_scale_rule(2)), std::out_of_range);
  CHECK_THROWS_AS(z_scale_rule(2).at(0), std::out_of_range);
}

TEST_CASE("scale substitution is multiplicative") {
  std::mt19937 rng(5);
  const AlphabetRule rule = z_scale_rule(8);
  for (int trial = 0; trial < 25; ++trial) {
    const PExpansion a = random_expansion(rng, 4);
    const PExpansion b = random_expansion(rng, 4);
    CHECK(equivalent(pleth_apply(a * b, rule), pleth_apply(a, rule) * pleth_apply(b, rule)));
    CHECK(equivalent(pleth_apply(a + b, rule), pleth_apply(a, rule) + pleth_apply(b, rule)));
  }
}

TEST_CASE("creation operators") {
  CHECK(equivalent(c_op(1, PExpansion::one()), p({1})));
  CHECK(equivalent(c_composition({1}), p({1})));
  for (int a = 1; a <= 4; ++a) {
    const PExpansion out = c_op(a, PExpansion::one());
    CHECK(out.is_z_free());
    CHECK(out.homogeneous_degree() == a);
  }
  const PExpansion nested = c_composition({2, 1, 1});
  CHECK(nested.is_z_free());
  CHECK(nested.homogeneous_degree() == 4);
  CHECK(equivalent(nested, c_op(2, c_op(1, c_op(1, PExpansion::one())))));

  CHECK_THROWS_AS(c_op(0, PExpansion::one()), std::invalid_argument);
  CHECK_THROWS_AS(c_op(1, p({1}).scaled(ZPoly::z())), std::invalid_argument);
  CHECK_THROWS_AS(c_op(1, p({1}) + p({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(c_op(3, p({3, 3}), 8), std::invalid_argument);
  CHECK_THROWS_AS(c_composition({}), std::invalid_argument);
  CHECK(c_op(2, PExpansion()).is_zero());
}

TEST_CASE("E_{n,k}") {
  const auto e1 = e_nk(1);
  REQUIRE(e1.size() == 1);
  CHECK(equivalent(e1[0], p({1})));

  for (int n = 1; n <= 6; ++n) {
    const auto e = e_nk(n);
    REQUIRE(static_cast<int>(e.size()) == n);
    for (const PExpansion& ek : e) {
      CHECK(ek.is_z_free());
      CHECK(ek.homogeneous_degree() == n);
    }
    // Substituting back reproduces e_n[X (1 - z)/(1 - q)].
    CHECK(equivalent(reassemble(e), pleth_apply(e_in_p(n), z_scale_rule(n))));
    CHECK(enk_sum_check(n));
  }

  // -p_2 = [2]_q E_{2,1} + E_{2,2}
  const auto e2 = e_nk(2);
  CHECK(equivalent(e2[0].scaled(ZPoly(QTRatio(q_int(2)))) + e2[1], p({2}).scaled(ZPoly(-1))));
}

TEST_CASE("operator identities, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(hmz_check(n));
    CHECK(pn_identity_check(n));
  }
  // Single-composition extremes.
  CHECK(equivalent(e_nk(3)[0], c_composition({3})));
  CHECK(equivalent(e_nk(3)[2], c_composition({1, 1, 1})));
}

TEST_CASE("fundamental expansions of symmetric functions") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(sym_to_qsym(h_in_p(n), n) == indicator(0, n));
    CHECK(sym_to_qsym(e_in_p(n), n) == indicator(full(n), n));
  }
  QSymF p2(2);
  p2.add(0, QTPoly(1));
  p2.add(subset_from({1}), QTPoly(-1));
  CHECK(sym_to_qsym(p({2}), 2) == p2);

  const ExplicitPoly en = to_monomials(e_in_p(3), 3);
  CHECK(en.size() == 1);
  CHECK(en.at({1, 1, 1}) == QTPoly(1));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto parts = partitions_of(4);
    const PExpansion f = p(parts[rng() % parts.size()]).scaled(ZPoly(QTRatio(QTPoly::t())));
    const PExpansion g = p(parts[rng() % parts.size()]).scaled(c(3));
    CHECK(sym_to_qsym(f + g, 4) == sym_to_qsym(f, 4) + sym_to_qsym(g, 4));
  }

  CHECK_THROWS_AS(sym_to_qsym(p({2}).scaled(ZPoly::z()), 2), std::invalid_argument);
  CHECK_THROWS_AS(sym_to_qsym(p({2}) + p({1}), 2), std::invalid_argument);
  CHECK_THROWS_AS(sym_to_qsym(p({3}), 2), std::invalid_argument);
}

TEST_CASE("serialization") {
  const PExpansion f = e_in_p(2);
  CHECK(f.to_json().dump() == R"({"[1,1]":"1/2","[2]":"-1/2"})");
}
