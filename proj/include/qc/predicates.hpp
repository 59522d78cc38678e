#pragma once

#include <optional>

#include "qc/weyl.hpp"

namespace qc {

/// Certificate for a failed predicate: either two orbit members pairing to
/// distinct nonzero absolute values, or a simple root violating ampleness.
struct PredicateWitness {
  enum class Kind { CorootPair, AmpleViolation };
  Kind kind = Kind::CorootPair;
  RatVec first;   // orbit member / offending simple root
  RatVec second;  // second orbit member (CorootPair only)
  Rational value_first;
  Rational value_second;
  int simple_index = -1;  // AmpleViolation vertex
};

struct Verdict {
  bool value = false;
  std::optional<PredicateWitness> witness;
  explicit operator bool() const { return value; }
};

/// All pairings with the dual (co)roots lie in {-1, 0, 1}.
bool is_minuscule(const LatticeVector& v, const RootDatum& datum);

/// The dominant representative equals a fundamental (co)weight attached to a
/// special (characters) resp. cospecial (cocharacters) vertex. Decided on
/// the projection to the root span, so central components are ignored.
bool is_cominuscule(const LatticeVector& v, const RootDatum& datum);

/// On every Weyl-Galois orbit of dual (co)roots the nonzero absolute pairing
/// values are constant. On failure the witness records a violating pair.
Verdict is_quasi_constant(const LatticeVector& v, const RootDatum& datum,
                          const GaloisAction& galois);

/// Per-orbit max over min nonzero absolute pairing ratio is at most p - 1.
bool is_orbitally_p_close(const LatticeVector& v, std::int64_t p, const RootDatum& datum,
                          const GaloisAction& galois);

/// Strictly negative pairing with every simple (co)root outside the Levi.
Verdict is_L_ample(const LatticeVector& v, const LeviType& levi, const RootDatum& datum);

bool is_p_L_admissible(const LatticeVector& v, std::int64_t p, const LeviType& levi,
                       const RootDatum& datum, const GaloisAction& galois);

}  // namespace qc
