#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qc/classify.hpp"

using namespace qc;

namespace {

RootDatum simple_datum(char type, int rank,
                       LatticeKind kind = LatticeKind::SimplyConnected) {
  RootSystemSpec spec;
  spec.factors = {{type, rank}};
  spec.char_lattice.kind = kind;
  return build(spec);
}

LatticeVector fw_combo(const RootDatum& d, const std::vector<std::int64_t>& coeffs) {
  RatVec v = RatVec::Zero(d.ambient_dim);
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i]) v += d.fundamental_weights.col(static_cast<int>(i)) * Rational(coeffs[i]);
  return {v, Side::Character};
}

}  // namespace

TEST_CASE("classify_simple certificates") {
  RootDatum c3 = simple_datum('C', 3);
  ClassificationResult res = classify_simple(fw_combo(c3, {0, 0, 3}), c3);
  CHECK(res.quasi_constant);
  REQUIRE(res.multiplier.has_value());
  CHECK(*res.multiplier == Rational(3));
  REQUIRE(res.kinds.size() == 1);
  CHECK(res.kinds[0].tag == KindTag::Cominuscule);
  CHECK(res.kinds[0].vertex == 2);
  CHECK(res.kinds[0].multiplier == Rational(3));

  ClassificationResult zero = classify_simple({RatVec::Zero(3), Side::Character}, c3);
  CHECK(zero.quasi_constant);
  CHECK(*zero.multiplier == Rational(1));
  CHECK(zero.kinds[0].tag == KindTag::Trivial);

  RootDatum f4 = simple_datum('F', 4);
  ClassificationResult bad = classify_simple(fundamental_weight(f4, 1), f4);
  CHECK_FALSE(bad.quasi_constant);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->value_first != bad.witness->value_second);
  CHECK(!bad.witness->value_first.is_zero());
  CHECK(!bad.witness->value_second.is_zero());
  // both witness coroots lie in one Weyl orbit: equal lengths
  CHECK(dot(bad.witness->first, bad.witness->first) ==
        dot(bad.witness->second, bad.witness->second));

  RootSystemSpec prod;
  prod.factors = {{'A', 1}, {'A', 1}};
  RootDatum d2 = build(prod);
  CHECK_THROWS_AS(classify_simple({RatVec::Zero(4), Side::Character}, d2), SpecError);
}

TEST_CASE("simply laced verdicts are minuscule") {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 4}, {'D', 4}, {'E', 6}}) {
    RootDatum d = simple_datum(t, n);
    for (int i = 0; i < n; ++i) {
      ClassificationResult res = classify_simple(fundamental_weight(d, i), d);
      CAPTURE(t);
      CAPTURE(i);
      if (res.quasi_constant) CHECK(res.kinds[0].tag == KindTag::Minuscule);
    }
    // every quasi-constant fundamental ray of A_n exists and is minuscule
    if (t == 'A')
      for (int i = 0; i < n; ++i)
        CHECK(classify_simple(fundamental_weight(d, i), d).quasi_constant);
  }
}

TEST_CASE("classify_general over a factor-swap Galois action") {
  RootSystemSpec spec;
  spec.factors = {{'B', 2}, {'B', 2}};
  RootDatum d = build(spec);
  GaloisAction swap = make_galois(d, {{2, 3, 0, 1}});

  ClassificationResult hom = classify_general(fw_combo(d, {1, 0, 1, 0}), d, swap);
  CHECK(hom.quasi_constant);
  CHECK(*hom.multiplier == Rational(1));
  CHECK(hom.kinds[0].tag == KindTag::Cominuscule);
  CHECK(hom.kinds[1].tag == KindTag::Cominuscule);

  ClassificationResult mixed_mult = classify_general(fw_combo(d, {1, 0, 2, 0}), d, swap);
  CHECK_FALSE(mixed_mult.quasi_constant);
  REQUIRE(mixed_mult.witness.has_value());

  // same multiplier but mixed kinds across conjugate factors
  ClassificationResult mixed_kind = classify_general(fw_combo(d, {1, 0, 0, 1}), d, swap);
  CHECK_FALSE(mixed_kind.quasi_constant);

  // without Galois all of these decouple
  GaloisAction triv = trivial_galois();
  CHECK(classify_general(fw_combo(d, {1, 0, 2, 0}), d, triv).quasi_constant);
  CHECK(classify_general(fw_combo(d, {1, 0, 0, 1}), d, triv).quasi_constant);

  // one factor trivial is fine even under the swap
  ClassificationResult half = classify_general(fw_combo(d, {1, 0, 0, 0}), d, swap);
  CHECK(half.quasi_constant);
  CHECK(half.kinds[1].tag == KindTag::Trivial);
}

TEST_CASE("independent pieces take independent multipliers") {
  RootSystemSpec spec;
  spec.factors = {{'A', 1}, {'A', 1}};
  RootDatum d = build(spec);
  ClassificationResult res =
      classify_general(fw_combo(d, {1, 5}), d, trivial_galois());
  CHECK(res.quasi_constant);
  CHECK_FALSE(res.multiplier.has_value());  // 1 and 5 do not agree globally
  CHECK(res.kinds[0].tag == KindTag::Minuscule);
  CHECK(res.kinds[0].multiplier == Rational(1));
  CHECK(res.kinds[1].multiplier == Rational(5));
}

TEST_CASE("reconstruction from the certificate") {
  RootDatum c3 = simple_datum('C', 3);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
  GaloisAction triv = trivial_galois();
  int reconstructed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    LatticeVector chi = fw_combo(c3, {coeff(rng), coeff(rng), coeff(rng)});
    ClassificationResult res = classify_general(chi, c3, triv);
    if (!res.quasi_constant) continue;
    RatVec rebuilt = RatVec::Zero(c3.ambient_dim);
    for (const auto& kind : res.kinds)
      if (kind.tag != KindTag::Trivial)
        rebuilt += c3.fundamental_weights.col(kind.vertex) * kind.multiplier;
    CHECK(vec_eq(rebuilt, dominant_representative(chi, c3).first.coords));
    reconstructed++;
  }
  CHECK(reconstructed > 5);
}

TEST_CASE("oracle matches the defining condition") {
  GaloisAction triv = trivial_galois();
  RootDatum g2 = simple_datum('G', 2);
  CHECK(oracle_is_quasi_constant({RatVec::Zero(3), Side::Character}, g2, triv));
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b) {
      LatticeVector chi = fw_combo(g2, {a, b});
      bool expect = (a == 0 && b == 0);
      CHECK(oracle_is_quasi_constant(chi, g2, triv) == expect);
      CHECK(is_quasi_constant(chi, g2, triv).value == expect);
    }

  RootDatum e6 = simple_datum('E', 6);
  CHECK(oracle_is_quasi_constant(fundamental_weight(e6, 0), e6, triv));
  CHECK_FALSE(oracle_is_quasi_constant(fundamental_weight(e6, 3), e6, triv));
}

TEST_CASE("verdicts are invariant under Weyl moves and scaling") {
  GaloisAction triv = trivial_galois();
  RootDatum b3 = simple_datum('B', 3);
  std::mt19937 rng(77);
  std::uniform_int_distribution<std::int64_t> coeff(-2, 2);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    LatticeVector chi = fw_combo(b3, {coeff(rng), coeff(rng), coeff(rng)});
    bool verdict = classify_general(chi, b3, triv).quasi_constant;
    RatVec moved = chi.coords;
    for (int k = 0; k < 6; ++k) {
      int j = pick(rng);
      moved = moved - b3.simple_roots.col(j) * dot(moved, b3.simple_coroots.col(j));
    }
    CHECK(classify_general({moved, Side::Character}, b3, triv).quasi_constant == verdict);
    CHECK(classify_general({(chi.coords * Rational(-3)).eval(), Side::Character}, b3, triv)
              .quasi_constant == verdict);
  }
}

TEST_CASE("box verification: A3 and G2") {
  GaloisAction triv = trivial_galois();
  RootDatum a3 = simple_datum('A', 3);
  BoxSearchReport a3_report = verify_classification(a3, triv, 3);
  CHECK(a3_report.mismatches.empty());
  CHECK(a3_report.total == 343);

  RootDatum g2 = simple_datum('G', 2);
  BoxSearchReport g2_report = verify_classification(g2, triv, 4);
  CHECK(g2_report.mismatches.empty());
  CHECK(g2_report.quasi_constant_count == 1);  // only the zero vector
  CHECK(g2_report.quasi_constant_nonzero == 0);
  CHECK(g2_report.qc_dominant_rays.empty());
  CHECK(g2_report.total == 81);

  CHECK_THROWS_AS(verify_classification(g2, triv, 0), SpecError);
}

TEST_CASE("box verification finds the two extremal rays of B3") {
  GaloisAction triv = trivial_galois();
  RootDatum b3 = simple_datum('B', 3);
  BoxSearchReport report = verify_classification(b3, triv, 2);
  CHECK(report.mismatches.empty());
  REQUIRE(report.qc_dominant_rays.size() == 2);
  RatVec e1 = RatVec::Zero(3);
  e1[0] = 1;
  RatVec ones = RatVec::Constant(3, Rational(1));
  CHECK(vec_eq(report.qc_dominant_rays[0], e1));
  CHECK(vec_eq(report.qc_dominant_rays[1], ones));
}

TEST_CASE("box verification at rank 8") {
  GaloisAction triv = trivial_galois();
  for (char t : {'B', 'C'}) {
    RootDatum d = simple_datum(t, 8);
    BoxSearchReport report = verify_classification(d, triv, 1);
    CHECK(report.mismatches.empty());
    RatVec e1 = RatVec::Zero(8);
    e1[0] = 1;
    RatVec ones = RatVec::Constant(8, Rational(1));
    for (const auto& ray : report.qc_dominant_rays)
      CHECK((vec_eq(ray, e1) || vec_eq(ray, ones)));
  }
}

TEST_CASE("box verification under a diagram flip") {
  RootDatum e6 = simple_datum('E', 6);
  GaloisAction flip = make_galois(e6, {{5, 1, 4, 3, 2, 0}});
  BoxSearchReport report = verify_classification(e6, flip, 1);
  CHECK(report.mismatches.empty());
}

TEST_CASE("box verification on the adjoint lattice") {
  GaloisAction triv = trivial_galois();
  RootDatum c3_ad = simple_datum('C', 3, LatticeKind::Adjoint);
  BoxSearchReport report = verify_classification(c3_ad, triv, 2);
  CHECK(report.mismatches.empty());
  CHECK(report.lattice_desc == "C3 adjoint characters");
}

TEST_CASE("box verification is deterministic across thread counts") {
  GaloisAction triv = trivial_galois();
  RootDatum b3 = simple_datum('B', 3);
  BoxSearchReport one = verify_classification(b3, triv, 2, Side::Character, 1);
  BoxSearchReport many = verify_classification(b3, triv, 2, Side::Character, 4);
  CHECK(one.quasi_constant_count == many.quasi_constant_count);
  CHECK(one.mismatches == many.mismatches);
  REQUIRE(one.qc_dominant_rays.size() == many.qc_dominant_rays.size());
  for (size_t i = 0; i < one.qc_dominant_rays.size(); ++i)
    CHECK(vec_eq(one.qc_dominant_rays[i], many.qc_dominant_rays[i]));
}

TEST_CASE("cocharacter-side classification") {
  RootDatum c3 = simple_datum('C', 3);
  GaloisAction triv = trivial_galois();
  // the coweight at the special vertex is the minuscule one
  ClassificationResult res =
      classify_general(fundamental_coweight(c3, 2), c3, triv);
  CHECK(res.quasi_constant);
  CHECK(res.kinds[0].tag == KindTag::Minuscule);
  ClassificationResult res2 =
      classify_general(fundamental_coweight(c3, 0), c3, triv);
  CHECK(res2.quasi_constant);
  CHECK(res2.kinds[0].tag == KindTag::Cominuscule);
  CHECK_FALSE(classify_general(fundamental_coweight(c3, 1), c3, triv).quasi_constant);

  BoxSearchReport box = verify_classification(c3, triv, 2, Side::Cocharacter);
  CHECK(box.mismatches.empty());
}
