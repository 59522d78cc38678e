#include "qc/hasse.hpp"

#include <algorithm>

namespace qc {

std::int64_t largest_prime_leq(std::int64_t n) {
  auto is_prime = [](std::int64_t k) {
    if (k < 2) return false;
    for (std::int64_t d = 2; d * d <= k; ++d)
      if (k % d == 0) return false;
    return true;
  };
  for (std::int64_t k = n; k >= 2; --k)
    if (is_prime(k)) return k;
  throw SpecError("no prime <= " + std::to_string(n));
}

Rational orbital_ratio(const LatticeVector& chi, const RootDatum& datum,
                       const GaloisAction& galois) {
  OrbitPartition part = dual_orbit_partition(datum, galois, chi.side);
  const auto& objects = datum.dual_objects(chi.side);
  Rational ratio(1);
  for (const auto& members : part.orbits) {
    Rational max_abs(0);
    Rational min_nonzero;
    bool seen = false;
    for (int idx : members) {
      Rational a = abs(dot(chi.coords, objects[idx]));
      if (a.is_zero()) continue;
      if (!seen || a < min_nonzero) min_nonzero = a;
      if (a > max_abs) max_abs = a;
      seen = true;
    }
    if (seen) ratio = std::max(ratio, max_abs / min_nonzero);
  }
  return ratio;
}

BoundReport bound_for_levi(const RootDatum& datum, const LeviType& levi,
                           const GaloisAction& galois) {
  if (!datum.irreducible())
    throw SpecError("purity bounds are computed per irreducible factor");
  std::vector<int> outside = levi.complement(datum.rank());
  if (outside.empty()) throw SpecError("the Levi must be proper: no bound for Levi = all of Delta");
  for (int alpha : levi.subset)
    if (alpha < 0 || alpha >= datum.rank()) throw SpecError("Levi subset index out of range");

  BoundReport report;
  report.levi = levi;
  report.eta = RatVec::Zero(datum.ambient_dim);
  for (int alpha : outside) report.eta += datum.fundamental_weights.col(alpha);

  report.ratio = orbital_ratio({report.eta, Side::Character}, datum, galois);
  report.min_p = std::max<std::int64_t>(2, (report.ratio + Rational(1)).ceil());
  report.c_bound = report.ratio == Rational(1) ? 1 : largest_prime_leq(report.ratio.floor());

  const Factor& fac = datum.factors[0];
  bool has_short_outside = false;
  for (int alpha : outside) {
    const RatVec& a = datum.simple_roots.col(alpha);
    if (dot(a, a) == fac.short_norm_sq) has_short_outside = true;
  }
  const RatVec& dominant_coroot = (fac.simply_laced || has_short_outside)
                                      ? fac.highest_coroot
                                      : fac.coroot_of_highest_root;
  report.shortcut = dot(report.eta, dominant_coroot);
  if (report.shortcut != report.ratio)
    throw InvariantError("dominant-coroot shortcut disagrees with the orbital ratio for " +
                         type_label(fac));
  return report;
}

std::vector<TableEntry> full_table(int max_rank) {
  if (max_rank < 2) throw SpecError("max rank must be >= 2");
  std::vector<std::pair<char, int>> types;
  for (int n = 1; n <= max_rank; ++n) types.emplace_back('A', n);
  for (int n = 2; n <= max_rank; ++n) types.emplace_back('B', n);
  for (int n = 2; n <= max_rank; ++n) types.emplace_back('C', n);
  for (int n = 3; n <= max_rank; ++n) types.emplace_back('D', n);
  for (int n = 6; n <= std::min(8, max_rank); ++n) types.emplace_back('E', n);
  if (max_rank >= 4) types.emplace_back('F', 4);
  types.emplace_back('G', 2);

  std::vector<TableEntry> entries;
  for (auto [letter, rank] : types) {
    RootSystemSpec spec;
    spec.factors = {{letter, rank}};
    RootDatum datum = build(spec);
    GaloisAction galois = trivial_galois();
    for (int alpha = 0; alpha < rank; ++alpha) {
      LeviType levi;
      for (int i = 0; i < rank; ++i)
        if (i != alpha) levi.subset.push_back(i);
      TableEntry entry;
      entry.type = std::string(1, letter) + std::to_string(rank);
      entry.rank = rank;
      entry.vertex = alpha + 1;
      entry.report = bound_for_levi(datum, levi, galois);
      entries.push_back(std::move(entry));
    }
  }
  return entries;
}

HasseCertificate hasse_generator(const RootDatum& datum, const Ray& mu,
                                 const GaloisAction& galois) {
  if (mu.side != Side::Cocharacter)
    throw SpecError("hasse_generator expects a cocharacter ray");
  bool central = true;
  for (int i = 0; i < datum.rank() && central; ++i)
    central = dot(datum.simple_roots.col(i), mu.direction).is_zero();
  if (central) throw SpecError("central cocharacter ray admits no Hasse generator certificate");

  HasseCertificate cert;
  cert.mu = mu;
  cert.levi = centralizer_levi(mu, datum);
  Ray dual = dualize_ray(mu, datum, galois);  // validates dominance and quasi-constancy
  cert.mu_star = dual.direction;
  cert.lambda = -dual.direction;

  LatticeVector lambda{cert.lambda, Side::Character};
  cert.l_ample = is_L_ample(lambda, cert.levi, datum).value;
  cert.quasi_constant = is_quasi_constant({cert.mu_star, Side::Character}, datum, galois).value;
  cert.admissible_at_2 = is_p_L_admissible(lambda, 2, cert.levi, datum, galois);
  return cert;
}

}  // namespace qc
