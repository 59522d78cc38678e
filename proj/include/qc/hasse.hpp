#pragma once

#include "qc/duality.hpp"

namespace qc {

/// Purity bound data for one Levi type of an irreducible datum.
struct BoundReport {
  LeviType levi;
  RatVec eta;                // sum of fundamental weights outside the Levi
  Rational ratio;            // R: max over coroot orbits of max / min nonzero |pairing|
  std::int64_t min_p = 2;    // smallest integer p >= 2 with R <= p - 1
  std::int64_t c_bound = 1;  // 1 when R == 1, else largest prime <= floor(R)
  Rational shortcut;         // pairing with the relevant dominant coroot
  bool sufficiency_only = true;  // the bound certifies purity above it, nothing below
};

/// Max over Weyl-Galois coroot orbits of (max |pairing|) / (min nonzero
/// |pairing|); 1 when every orbit pairs to zero.
Rational orbital_ratio(const LatticeVector& chi, const RootDatum& datum,
                       const GaloisAction& galois);

/// Bound report for the Levi cut out by the subset; the shortcut pairing is
/// checked against the brute-force ratio and a mismatch is an internal error.
BoundReport bound_for_levi(const RootDatum& datum, const LeviType& levi,
                           const GaloisAction& galois);

struct TableEntry {
  std::string type;     // e.g. "E8"
  int rank = 0;
  int vertex = 0;       // 1-based Bourbaki index
  BoundReport report;
};

/// One entry per (irreducible type of rank <= max_rank, maximal Levi).
std::vector<TableEntry> full_table(int max_rank);

/// Character-level Hasse-generator certificate attached to a dominant
/// quasi-constant cocharacter ray.
struct HasseCertificate {
  Ray mu;
  RatVec mu_star;  // primitive integral point on the dual character ray
  RatVec lambda;   // -mu_star
  LeviType levi;
  bool l_ample = false;
  bool quasi_constant = false;
  bool admissible_at_2 = false;

  bool ok() const { return l_ample && quasi_constant && admissible_at_2; }
};

HasseCertificate hasse_generator(const RootDatum& datum, const Ray& mu,
                                 const GaloisAction& galois);

std::int64_t largest_prime_leq(std::int64_t n);

}  // namespace qc
