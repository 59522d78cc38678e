#include "qc/linalg.hpp"

#include <ostream>

namespace qc {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

Rational Rational::parse(const std::string& text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw std::invalid_argument("empty rational literal");
  std::string s = text.substr(begin, end - begin + 1);
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(static_cast<std::int64_t>(std::stoll(s)));
    return Rational(static_cast<std::int64_t>(std::stoll(s.substr(0, slash))),
                    static_cast<std::int64_t>(std::stoll(s.substr(slash + 1))));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
}

std::optional<RatVec> solve_consistent(const RatMat& A, const RatVec& b) {
  Eigen::FullPivLU<RatMat> lu(A);
  RatVec x = lu.solve(b);
  if ((A * x - b).isZero(Rational(0))) return x;
  return std::nullopt;
}

RatVec primitive_integer_scale(const RatVec& v) {
  if (is_zero_vec(v)) throw SpecError("cannot scale the zero vector to a primitive vector");
  std::int64_t l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = std::lcm(l, v[i].den());
  std::int64_t g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * Rational(l);
    g = std::gcd(g, scaled.num());
  }
  return v * Rational(l, g);
}

}  // namespace qc
