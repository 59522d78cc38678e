#pragma once

#include <set>

#include "qc/rootdata.hpp"

namespace qc {

/// Finite group of based root-datum automorphisms given by permutations of
/// the simple-root indices; models the Galois action on the based datum.
struct GaloisAction {
  std::vector<std::vector<int>> generators;  // image lists over simple indices
  std::vector<RatMat> maps;                  // induced ambient linear maps
  std::vector<std::vector<int>> factor_maps; // induced permutation of factors

  bool trivial() const { return generators.empty(); }
};

/// Validates Cartan-matrix preservation and builds the induced linear maps;
/// throws SpecError if a permutation does not preserve the based datum.
GaloisAction make_galois(const RootDatum& datum,
                         const std::vector<std::vector<int>>& perms);

inline GaloisAction trivial_galois() { return {}; }

/// Orthogonal reflection in the hyperplane of the given root; the same
/// formula serves both sides of the datum.
LatticeVector reflect(const LatticeVector& v, const RootDatum& datum, const RatVec& root);

/// Reflection by root index, no membership check.
RatVec reflect_by_index(const RatVec& v, const RootDatum& datum, int root_idx);

/// Closure of v under the simple reflections (and the Galois generators when
/// use_galois is set), in breadth-first discovery order.
std::vector<RatVec> orbit(const LatticeVector& v, const RootDatum& datum,
                          const GaloisAction& galois, bool use_galois);

/// The unique dominant element of the Weyl orbit of v, together with the
/// sequence of simple reflections carrying v to it (applied left to right).
std::pair<LatticeVector, std::vector<int>> dominant_representative(const LatticeVector& v,
                                                                   const RootDatum& datum);

/// Partition of the (co)roots into orbits under W (and Galois); orbits hold
/// indices into datum.roots / datum.coroots in discovery order.
struct OrbitPartition {
  Side side = Side::Cocharacter;  // Cocharacter: orbits of coroots
  std::vector<std::vector<int>> orbits;
  std::vector<int> representative;  // first element of each orbit
};

OrbitPartition coroot_orbit_partition(const RootDatum& datum, const GaloisAction& galois);
OrbitPartition root_orbit_partition(const RootDatum& datum, const GaloisAction& galois);

/// Orbit partition of the dual objects paired against the given side:
/// coroots for characters, roots for cocharacters.
OrbitPartition dual_orbit_partition(const RootDatum& datum, const GaloisAction& galois,
                                    Side side);

/// Set of |<chi, gamma>| over the given orbit elements.
std::set<Rational> pairing_value_set(const LatticeVector& chi,
                                     const std::vector<RatVec>& orbit_elements);

/// Materializes one orbit of a partition as coordinate vectors.
std::vector<RatVec> orbit_vectors(const RootDatum& datum, const OrbitPartition& partition,
                                  int orbit_index);

}  // namespace qc
