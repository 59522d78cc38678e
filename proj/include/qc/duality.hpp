#pragma once

#include "qc/classify.hpp"

namespace qc {

/// Half-line of rational (co)characters, stored as the primitive integral
/// point of the chosen lattice on that ray.
struct Ray {
  RatVec direction;
  Side side = Side::Cocharacter;
};

/// Primitive representative of the ray through v in the side's lattice.
Ray make_ray(const LatticeVector& v, const RootDatum& datum);

bool ray_eq(const Ray& a, const Ray& b);

/// Simple roots pairing to zero with the ray; the Levi of its centralizer.
LeviType centralizer_levi(const Ray& r, const RootDatum& datum);

/// The dual character ray of a dominant quasi-constant cocharacter ray:
/// blockwise, a nonzero factor projection (necessarily a fundamental
/// coweight direction) is replaced by the matching fundamental weight.
Ray dualize_ray(const Ray& r, const RootDatum& datum, const GaloisAction& galois);

/// Mirror construction, fundamental weights to fundamental coweights.
Ray dualize_ray_inverse(const Ray& r, const RootDatum& datum, const GaloisAction& galois);

/// All dominant quasi-constant rays on the given side with unit multiplier
/// per Galois piece, enumerated from the admissible vertex selections.
std::vector<Ray> enumerate_quasi_constant_dominant_rays(const RootDatum& datum,
                                                        const GaloisAction& galois,
                                                        Side side);

struct RayCheck {
  Ray ray;
  Ray dual;
  bool input_quasi_constant = false;
  bool dual_quasi_constant = false;
  bool levi_restriction = false;  // dual vanishes exactly on the Levi of Cent(ray)
  bool levi_maximal = false;      // nonzero pairing outside that Levi
  bool involution = false;        // round trip returns the ray

  bool ok() const {
    return input_quasi_constant && dual_quasi_constant && levi_restriction && levi_maximal &&
           involution;
  }
};

struct DualityReport {
  std::vector<RayCheck> cocharacter_checks;
  std::vector<RayCheck> character_checks;
  bool bijection = false;  // duals of one side reproduce the other side exactly
  bool all_ok = false;
};

/// Enumerates both sides and verifies quasi-constancy of duals, the Levi
/// restriction property, maximality, the round-trip involution and the
/// bijection between the two enumerated families.
DualityReport verify_duality(const RootDatum& datum, const GaloisAction& galois);

}  // namespace qc
