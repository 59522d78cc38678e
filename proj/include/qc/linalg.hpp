#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "qc/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<qc::Rational> {
  typedef qc::Rational Real;
  typedef qc::Rational NonInteger;
  typedef qc::Rational Nested;
  typedef qc::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 12,
    MulCost = 12
  };
  static inline Real epsilon() { return qc::Rational(0); }
  static inline Real dummy_precision() { return qc::Rational(0); }
  static inline int digits10() { return 18; }
};

}  // namespace Eigen

namespace qc {

using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Invalid user input: bad spec, bad vector, unsatisfied precondition.
struct SpecError : Error {
  using Error::Error;
};
/// Internal consistency failure; indicates a bug, never user error.
struct InvariantError : Error {
  using Error::Error;
};

inline Rational dot(const RatVec& a, const RatVec& b) { return a.dot(b); }

/// Strict lexicographic order on coordinate vectors.
struct LexLess {
  bool operator()(const RatVec& a, const RatVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

inline bool vec_eq(const RatVec& a, const RatVec& b) {
  return a.size() == b.size() && a == b;
}

inline bool is_zero_vec(const RatVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return false;
  return true;
}

inline bool is_integral_vec(const RatVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v[i].is_integer()) return false;
  return true;
}

/// Solves A x = b exactly; empty when the system is inconsistent.
std::optional<RatVec> solve_consistent(const RatMat& A, const RatVec& b);

/// Scales a nonzero rational vector by the unique positive rational making
/// its entries coprime integers.
RatVec primitive_integer_scale(const RatVec& v);

}  // namespace qc
