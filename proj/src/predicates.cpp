#include "qc/predicates.hpp"

namespace qc {

bool is_minuscule(const LatticeVector& v, const RootDatum& datum) {
  const Rational one(1), minus_one(-1);
  for (const auto& g : datum.dual_objects(v.side)) {
    Rational p = dot(v.coords, g);
    if (!p.is_zero() && p != one && p != minus_one) return false;
  }
  return true;
}

bool is_cominuscule(const LatticeVector& v, const RootDatum& datum) {
  // drop any central component: solve the normal equations of the root span
  RatVec w = v.coords;
  const RatMat& span = datum.simple_roots;
  RatMat gram = span.transpose() * span;
  Eigen::FullPivLU<RatMat> lu(gram);
  RatVec y = lu.solve(span.transpose() * w);
  w = span * y;

  RatVec d = dominant_representative({w, v.side}, datum).first.coords;
  for (int i = 0; i < datum.rank(); ++i) {
    const Factor& fac = datum.factors[datum.factor_of_simple(i)];
    int local = i - fac.simple_begin;
    bool eligible = v.side == Side::Character ? fac.vertices.special[local]
                                              : fac.vertices.cospecial[local];
    if (!eligible) continue;
    const RatMat& fund = v.side == Side::Character ? datum.fundamental_weights
                                                   : datum.fundamental_coweights;
    if (vec_eq(d, fund.col(i))) return true;
  }
  return false;
}

Verdict is_quasi_constant(const LatticeVector& v, const RootDatum& datum,
                          const GaloisAction& galois) {
  OrbitPartition part = dual_orbit_partition(datum, galois, v.side);
  const auto& objects = datum.dual_objects(v.side);
  for (const auto& members : part.orbits) {
    int first_nonzero = -1;
    Rational first_value;
    for (int idx : members) {
      Rational p = abs(dot(v.coords, objects[idx]));
      if (p.is_zero()) continue;
      if (first_nonzero < 0) {
        first_nonzero = idx;
        first_value = p;
      } else if (p != first_value) {
        PredicateWitness w;
        w.kind = PredicateWitness::Kind::CorootPair;
        w.first = objects[first_nonzero];
        w.second = objects[idx];
        w.value_first = first_value;
        w.value_second = p;
        return {false, w};
      }
    }
  }
  return {true, std::nullopt};
}

bool is_orbitally_p_close(const LatticeVector& v, std::int64_t p, const RootDatum& datum,
                          const GaloisAction& galois) {
  if (p < 2) throw SpecError("orbitally p-close needs p >= 2");
  OrbitPartition part = dual_orbit_partition(datum, galois, v.side);
  const auto& objects = datum.dual_objects(v.side);
  Rational bound(p - 1);
  for (const auto& members : part.orbits) {
    Rational max_abs(0);
    Rational min_nonzero;
    bool seen_nonzero = false;
    for (int idx : members) {
      Rational a = abs(dot(v.coords, objects[idx]));
      if (a.is_zero()) continue;
      if (!seen_nonzero || a < min_nonzero) min_nonzero = a;
      if (a > max_abs) max_abs = a;
      seen_nonzero = true;
    }
    if (seen_nonzero && max_abs > bound * min_nonzero) return false;
  }
  return true;
}

Verdict is_L_ample(const LatticeVector& v, const LeviType& levi, const RootDatum& datum) {
  for (int alpha = 0; alpha < datum.rank(); ++alpha) {
    if (levi.contains(alpha)) continue;
    Rational p = dot(v.coords, datum.simple_dual(alpha, v.side));
    if (p >= Rational(0)) {
      PredicateWitness w;
      w.kind = PredicateWitness::Kind::AmpleViolation;
      w.first = datum.simple_roots.col(alpha);
      w.value_first = p;
      w.simple_index = alpha;
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

bool is_p_L_admissible(const LatticeVector& v, std::int64_t p, const LeviType& levi,
                       const RootDatum& datum, const GaloisAction& galois) {
  return is_orbitally_p_close(v, p, datum, galois) && is_L_ample(v, levi, datum).value;
}

}  // namespace qc
