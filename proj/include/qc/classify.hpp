#pragma once

#include <cstdint>

#include "qc/predicates.hpp"

namespace qc {

enum class KindTag { Trivial, Minuscule, Cominuscule };

struct FactorKind {
  KindTag tag = KindTag::Trivial;
  int vertex = -1;          // global simple-root index when nontrivial
  Rational multiplier = 0;  // positive when nontrivial
};

/// Outcome of the structural classification: either a certificate giving the
/// per-factor shape of the vector, or a witness pair violating the defining
/// ratio condition.
struct ClassificationResult {
  bool quasi_constant = false;
  std::vector<FactorKind> kinds;       // one entry per irreducible factor
  std::optional<Rational> multiplier;  // common multiplier when consistent
  std::optional<PredicateWitness> witness;
};

/// Classification for an irreducible factor with trivial Galois action.
ClassificationResult classify_simple(const LatticeVector& v, const RootDatum& datum);

/// Full classification: decomposes the factors into Galois orbits and tests
/// the per-piece shape (common multiplier, homogeneous kind).
ClassificationResult classify_general(const LatticeVector& v, const RootDatum& datum,
                                      const GaloisAction& galois, bool with_witness = true);

/// Literal evaluation of the defining condition: for each (co)root pairing
/// nonzero, every member of its Weyl-Galois orbit must pair to the same
/// absolute value or zero. No orbit-partition shortcuts.
bool oracle_is_quasi_constant(const LatticeVector& v, const RootDatum& datum,
                              const GaloisAction& galois);

/// Precomputed per-object orbits so the oracle can be run over many vectors.
class OracleContext {
 public:
  OracleContext(const RootDatum& datum, const GaloisAction& galois, Side side);

  /// pairings[i] = <v, dual_i>; returns the literal-definition verdict.
  bool quasi_constant(const std::vector<Rational>& pairings) const;

  Side side() const { return side_; }

 private:
  Side side_;
  std::vector<std::vector<int>> orbit_of_;
};

struct BoxSearchReport {
  std::string lattice_desc;
  int coeff_bound = 0;
  std::uint64_t total = 0;
  std::uint64_t quasi_constant_count = 0;
  std::uint64_t quasi_constant_nonzero = 0;
  std::vector<std::vector<std::int64_t>> mismatches;  // coefficient tuples
  std::vector<RatVec> qc_dominant_rays;               // primitive, lex-sorted
  double elapsed_seconds = 0;

  bool ok() const { return mismatches.empty(); }
};

/// Scans every lattice vector with coefficients in [-bound, bound] in the
/// chosen lattice basis and compares the classifier against the oracle.
/// Slabs of the first coefficient run in parallel; output is deterministic.
BoxSearchReport verify_classification(const RootDatum& datum, const GaloisAction& galois,
                                      int bound, Side side = Side::Character,
                                      int threads = 0);

}  // namespace qc
