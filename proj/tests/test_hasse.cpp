#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qc/hasse.hpp"

using namespace qc;

namespace {

RootDatum simple_datum(char type, int rank) {
  RootSystemSpec spec;
  spec.factors = {{type, rank}};
  return build(spec);
}

LeviType levi_without(int rank, std::initializer_list<int> removed) {
  LeviType levi;
  for (int i = 0; i < rank; ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end())
      levi.subset.push_back(i);
  return levi;
}

}  // namespace

TEST_CASE("largest prime") {
  CHECK(largest_prime_leq(2) == 2);
  CHECK(largest_prime_leq(3) == 3);
  CHECK(largest_prime_leq(4) == 3);
  CHECK(largest_prime_leq(6) == 5);
  CHECK(largest_prime_leq(12) == 11);
  CHECK_THROWS_AS(largest_prime_leq(1), SpecError);
}

TEST_CASE("orbital ratio") {
  GaloisAction triv = trivial_galois();
  RootDatum c3 = simple_datum('C', 3);
  CHECK(orbital_ratio(fundamental_weight(c3, 2), c3, triv) == Rational(1));
  CHECK(orbital_ratio({RatVec::Zero(3), Side::Character}, c3, triv) == Rational(1));

  RootDatum f4 = simple_datum('F', 4);
  CHECK(orbital_ratio(fundamental_weight(f4, 1), f4, triv) == Rational(3));

  for (int n : {4, 6, 8}) {
    RootDatum bn = simple_datum('B', n);
    for (int j = 1; j + 1 < n; ++j)
      CHECK(orbital_ratio(fundamental_weight(bn, j), bn, triv) == Rational(2));
  }

  // per-orbit ratio, not global max over global min
  RootDatum g2 = simple_datum('G', 2);
  CHECK(orbital_ratio(fundamental_weight(g2, 1), g2, triv) == Rational(2));
}

TEST_CASE("bound_for_levi fields") {
  GaloisAction triv = trivial_galois();
  RootDatum b5 = simple_datum('B', 5);
  BoundReport middle = bound_for_levi(b5, levi_without(5, {2}), triv);
  CHECK(middle.ratio == Rational(2));
  CHECK(middle.c_bound == 2);
  CHECK(middle.min_p == 3);
  CHECK(middle.shortcut == Rational(2));
  CHECK(middle.sufficiency_only);

  RootDatum e8 = simple_datum('E', 8);
  BoundReport alpha4 = bound_for_levi(e8, levi_without(8, {3}), triv);
  CHECK(alpha4.ratio == Rational(6));
  CHECK(alpha4.c_bound == 5);

  // non-maximal Levi with composite multiplicities
  BoundReport big = bound_for_levi(e8, levi_without(8, {0, 2, 3}), triv);
  CHECK(big.ratio == Rational(12));
  CHECK(big.c_bound == 11);
  CHECK(big.min_p == 13);
  CHECK(big.shortcut == Rational(12));
  CHECK(big.sufficiency_only);

  CHECK_THROWS_AS(bound_for_levi(b5, levi_without(5, {}), triv), SpecError);
  RootSystemSpec prod;
  prod.factors = {{'A', 1}, {'A', 1}};
  RootDatum d2 = build(prod);
  CHECK_THROWS_AS(bound_for_levi(d2, levi_without(2, {0}), triv), SpecError);
}

TEST_CASE("dominant-coroot shortcut agrees with the ratio on every Levi") {
  GaloisAction triv = trivial_galois();
  // all proper Levi subsets for a spread of types; bound_for_levi throws on
  // any shortcut/ratio mismatch, so reaching the end is the assertion
  for (auto [t, n] : std::vector<std::pair<char, int>>{
           {'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}, {'E', 6}}) {
    RootDatum d = simple_datum(t, n);
    for (int mask = 0; mask < (1 << n) - 1; ++mask) {
      LeviType levi;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) levi.subset.push_back(i);
      BoundReport report = bound_for_levi(d, levi, triv);
      CHECK(report.shortcut == report.ratio);
      CHECK(report.ratio >= Rational(1));
      CHECK(Rational(report.c_bound) <= std::max(report.ratio, Rational(2)));
    }
  }
}

TEST_CASE("maximal-Levi ratio equals the coroot multiplicity in the short/simply-laced case") {
  GaloisAction triv = trivial_galois();
  for (auto [t, n] : std::vector<std::pair<char, int>>{
           {'A', 5}, {'D', 5}, {'E', 7}, {'B', 4}, {'C', 4}, {'F', 4}, {'G', 2}}) {
    RootDatum d = simple_datum(t, n);
    const Factor& fac = d.factors[0];
    for (int alpha = 0; alpha < n; ++alpha) {
      const RatVec& a = d.simple_roots.col(alpha);
      bool case_one = fac.simply_laced || dot(a, a) == fac.short_norm_sq;
      if (!case_one) continue;
      BoundReport report = bound_for_levi(d, levi_without(n, {alpha}), triv);
      CHECK(report.ratio == Rational(fac.vertices.m_dual[alpha]));
    }
  }
}

TEST_CASE("full table reproduces the printed bounds") {
  auto expected_C = [](char type, int rank, int vertex) -> std::int64_t {
    switch (type) {
      case 'A': return 1;
      case 'B':
      case 'C': return (vertex == 1 || vertex == rank) ? 1 : 2;
      case 'D': return (vertex == 1 || vertex >= rank - 1) ? 1 : 2;
      case 'G': return 2;
      case 'F': return (vertex == 1 || vertex == 4) ? 2 : 3;
      case 'E':
        if (rank == 6) return (vertex == 1 || vertex == 6) ? 1 : (vertex == 4 ? 3 : 2);
        if (rank == 7)
          return vertex == 7 ? 1 : ((vertex == 1 || vertex == 2 || vertex == 6) ? 2 : 3);
        return (vertex == 1 || vertex == 8) ? 2 : ((vertex == 4 || vertex == 5) ? 5 : 3);
      default: return -1;
    }
  };

  std::vector<TableEntry> entries = full_table(8);
  CHECK(!entries.empty());
  for (const auto& entry : entries) {
    CAPTURE(entry.type);
    CAPTURE(entry.vertex);
    CHECK(entry.report.c_bound == expected_C(entry.type[0], entry.rank, entry.vertex));
  }
  // every type instance of rank <= 8 appears with all its vertices
  std::map<std::string, int> vertex_count;
  for (const auto& entry : entries) vertex_count[entry.type]++;
  CHECK(vertex_count["A8"] == 8);
  CHECK(vertex_count["B2"] == 2);
  CHECK(vertex_count["D8"] == 8);
  CHECK(vertex_count["E8"] == 8);
  CHECK(vertex_count["F4"] == 4);
  CHECK(vertex_count["G2"] == 2);
  CHECK(vertex_count.size() == 33u);  // A1..A8, B2..B8, C2..C8, D3..D8, E6..E8, F4, G2

  CHECK_THROWS_AS(full_table(1), SpecError);
}

TEST_CASE("hasse generator certificates") {
  GaloisAction triv = trivial_galois();
  for (int g : {2, 3, 4, 6}) {
    RootDatum cg = simple_datum('C', g);
    Ray mu = make_ray(fundamental_coweight(cg, g - 1), cg);
    HasseCertificate cert = hasse_generator(cg, mu, triv);
    CHECK(cert.ok());
    CHECK(vec_eq(cert.lambda, RatVec::Constant(g, Rational(-1))));
    CHECK(cert.levi.subset.size() == static_cast<size_t>(g - 1));
  }

  RootDatum a3 = simple_datum('A', 3);
  Ray mu = make_ray(fundamental_coweight(a3, 0), a3);
  HasseCertificate cert = hasse_generator(a3, mu, triv);
  CHECK(cert.ok());
  CHECK(is_minuscule({cert.mu_star, Side::Character}, a3));

  // rejected inputs
  RootDatum c3 = simple_datum('C', 3);
  Ray not_qc = make_ray(fundamental_coweight(c3, 1), c3);
  CHECK_THROWS_AS(hasse_generator(c3, not_qc, triv), SpecError);
  Ray wrong_side = make_ray(fundamental_weight(c3, 0), c3);
  CHECK_THROWS_AS(hasse_generator(c3, wrong_side, triv), SpecError);
  LatticeVector neg{(-fundamental_coweight(c3, 0).coords).eval(), Side::Cocharacter};
  CHECK_THROWS_AS(hasse_generator(c3, make_ray(neg, c3), triv), SpecError);
}

TEST_CASE("certificates for every quasi-constant ray of the small types") {
  GaloisAction triv = trivial_galois();
  for (auto [t, n] : std::vector<std::pair<char, int>>{
           {'A', 4}, {'B', 4}, {'C', 4}, {'D', 5}, {'E', 6}, {'E', 7}}) {
    RootDatum d = simple_datum(t, n);
    auto rays = enumerate_quasi_constant_dominant_rays(d, triv, Side::Cocharacter);
    for (const Ray& mu : rays) {
      HasseCertificate cert = hasse_generator(d, mu, triv);
      CAPTURE(t);
      CHECK(cert.l_ample);
      CHECK(cert.quasi_constant);
      CHECK(cert.admissible_at_2);
    }
  }
}
