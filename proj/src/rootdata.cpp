#include "qc/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qc {

bool LeviType::contains(int alpha) const {
  return std::binary_search(subset.begin(), subset.end(), alpha);
}

std::vector<int> LeviType::complement(int rank) const {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i)
    if (!contains(i)) out.push_back(i);
  return out;
}

namespace {

RatVec unit(int dim, int i) {
  RatVec v = RatVec::Zero(dim);
  v[i] = 1;
  return v;
}

int factor_ambient_dim(const FactorSpec& f) {
  switch (f.type) {
    case 'A': return f.rank + 1;
    case 'B':
    case 'C':
    case 'D': return f.rank;
    case 'E': return 8;
    case 'F': return 4;
    case 'G': return 3;
    default: throw SpecError(std::string("unknown type letter '") + f.type + "'");
  }
}

void check_rank(const FactorSpec& f) {
  auto bad = [&] {
    throw SpecError("invalid rank " + std::to_string(f.rank) + " for type " +
                    std::string(1, f.type));
  };
  if (f.rank < 1) bad();
  switch (f.type) {
    case 'A': break;
    case 'B':
    case 'C':
      if (f.rank < 2) bad();
      break;
    case 'D':
      if (f.rank < 3) bad();
      break;
    case 'E':
      if (f.rank < 6 || f.rank > 8) bad();
      break;
    case 'F':
      if (f.rank != 4) bad();
      break;
    case 'G':
      if (f.rank != 2) bad();
      break;
    default: throw SpecError(std::string("unknown type letter '") + f.type + "'");
  }
}

/// Simple roots of one factor in its own coordinate block, Bourbaki planche
/// realization; the G2 plane {x1+x2+x3=0} and the F4/Bn/Cn coordinates match
/// the standard tables entry for entry.
std::vector<RatVec> simple_roots_for(const FactorSpec& f) {
  int n = f.rank;
  int d = factor_ambient_dim(f);
  std::vector<RatVec> roots;
  auto chain = [&](int count) {
    for (int i = 0; i < count; ++i) roots.push_back(unit(d, i) - unit(d, i + 1));
  };
  switch (f.type) {
    case 'A':
      chain(n);
      break;
    case 'B':
      chain(n - 1);
      roots.push_back(unit(d, n - 1));
      break;
    case 'C':
      chain(n - 1);
      roots.push_back(unit(d, n - 1) * Rational(2));
      break;
    case 'D':
      chain(n - 1);
      roots.push_back(unit(d, n - 2) + unit(d, n - 1));
      break;
    case 'E': {
      RatVec a1 = RatVec::Zero(8);
      for (int i = 0; i < 8; ++i) a1[i] = Rational((i == 0 || i == 7) ? 1 : -1, 2);
      roots.push_back(a1);
      roots.push_back(unit(8, 0) + unit(8, 1));
      roots.push_back(unit(8, 1) - unit(8, 0));
      for (int i = 0; i < 5; ++i) roots.push_back(unit(8, i + 2) - unit(8, i + 1));
      roots.resize(n);
      break;
    }
    case 'F':
      roots.push_back(unit(4, 1) - unit(4, 2));
      roots.push_back(unit(4, 2) - unit(4, 3));
      roots.push_back(unit(4, 3));
      {
        RatVec a4(4);
        a4 << Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2);
        roots.push_back(a4);
      }
      break;
    case 'G': {
      RatVec a1(3), a2(3);
      a1 << 1, -1, 0;
      a2 << -2, 1, 1;
      roots.push_back(a1);
      roots.push_back(a2);
      break;
    }
    default: throw SpecError("unknown type");
  }
  return roots;
}

int expected_root_count(const FactorSpec& f) {
  int n = f.rank;
  switch (f.type) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case 'F': return 48;
    case 'G': return 12;
    default: return 0;
  }
}

RatVec coroot_of(const RatVec& root) {
  Rational nsq = dot(root, root);
  return root * (Rational(2) / nsq);
}

/// Reflection closure of the simple roots under the simple reflections,
/// tracking each root's coefficients in the simple-root basis.
std::vector<std::pair<RatVec, RatVec>> reflection_closure(const std::vector<RatVec>& simples) {
  int r = static_cast<int>(simples.size());
  std::vector<RatVec> cosimples;
  for (const auto& a : simples) cosimples.push_back(coroot_of(a));

  std::map<RatVec, RatVec, LexLess> seen;  // root -> coefficients
  std::vector<RatVec> stack;
  for (int i = 0; i < r; ++i) {
    RatVec c = RatVec::Zero(r);
    c[i] = 1;
    seen.emplace(simples[i], c);
    stack.push_back(simples[i]);
  }
  while (!stack.empty()) {
    RatVec v = stack.back();
    stack.pop_back();
    RatVec c = seen.at(v);
    for (int j = 0; j < r; ++j) {
      Rational k = dot(v, cosimples[j]);
      if (k.is_zero()) continue;
      RatVec w = v - simples[j] * k;
      if (seen.count(w)) continue;
      RatVec cw = c;
      cw[j] -= k;
      seen.emplace(w, cw);
      stack.push_back(w);
    }
  }
  std::vector<std::pair<RatVec, RatVec>> out(seen.begin(), seen.end());
  return out;
}

/// Fundamental weights of one factor: columns of S * M^{-1} where
/// M(j, i) = <alpha_i, alpha_j^v>.
RatMat fundamental_basis(const RatMat& simples, const RatMat& duals) {
  RatMat M = duals.transpose() * simples;
  Eigen::FullPivLU<RatMat> lu(M);
  if (lu.rank() != M.rows()) throw InvariantError("singular Cartan pairing matrix");
  RatMat inv = lu.solve(RatMat::Identity(M.rows(), M.cols()));
  return simples * inv;
}

void validate_explicit_lattice(const RootDatum& datum, const RatMat& basis, Side side,
                               const char* side_name) {
  if (basis.rows() != datum.ambient_dim || basis.cols() != datum.rank())
    throw SpecError(std::string(side_name) +
                    " lattice basis must be ambient_dim x rank: expected " +
                    std::to_string(datum.ambient_dim) + "x" + std::to_string(datum.rank()));
  Eigen::FullPivLU<RatMat> lu(basis);
  if (lu.rank() != datum.rank())
    throw SpecError(std::string(side_name) + " lattice basis is not full rank");
  // lower bound: root (resp. coroot) lattice is contained in the lattice
  const RatMat& generators =
      side == Side::Character ? datum.simple_roots : datum.simple_coroots;
  for (int i = 0; i < datum.rank(); ++i) {
    RatVec x = lu.solve(generators.col(i));
    if (!(basis * x - generators.col(i)).isZero(Rational(0)) || !is_integral_vec(x))
      throw SpecError(std::string(side_name) +
                      " lattice does not contain the root/coroot lattice");
  }
  // upper bound: pairs integrally with every simple (co)root on the far side
  const RatMat& duals = side == Side::Character ? datum.simple_coroots : datum.simple_roots;
  for (int b = 0; b < basis.cols(); ++b)
    for (int i = 0; i < duals.cols(); ++i)
      if (!dot(basis.col(b), duals.col(i)).is_integer())
        throw SpecError(std::string(side_name) +
                        " lattice is not contained in the weight/coweight lattice");
}

std::vector<std::pair<RatVec, int>> make_lookup(const std::vector<RatVec>& vecs) {
  std::vector<std::pair<RatVec, int>> table;
  table.reserve(vecs.size());
  for (size_t i = 0; i < vecs.size(); ++i) table.emplace_back(vecs[i], static_cast<int>(i));
  std::sort(table.begin(), table.end(),
            [](const auto& a, const auto& b) { return LexLess{}(a.first, b.first); });
  return table;
}

int lookup(const std::vector<std::pair<RatVec, int>>& table, const RatVec& v) {
  auto it = std::lower_bound(table.begin(), table.end(), v, [](const auto& entry, const RatVec& key) {
    return LexLess{}(entry.first, key);
  });
  if (it != table.end() && vec_eq(it->first, v)) return it->second;
  return -1;
}

}  // namespace

int RootDatum::factor_of_simple(int alpha) const {
  for (size_t f = 0; f < factors.size(); ++f) {
    if (alpha >= factors[f].simple_begin && alpha < factors[f].simple_begin + factors[f].rank)
      return static_cast<int>(f);
  }
  throw SpecError("simple root index out of range: " + std::to_string(alpha));
}

int RootDatum::root_index(const RatVec& v) const { return lookup(root_lookup, v); }
int RootDatum::coroot_index(const RatVec& v) const { return lookup(coroot_lookup, v); }

RootDatum build(const RootSystemSpec& spec) {
  if (spec.factors.empty()) throw SpecError("root system spec needs at least one factor");
  for (const auto& f : spec.factors) check_rank(f);

  RootDatum datum;
  datum.spec = spec;

  int total_dim = 0;
  int total_rank = 0;
  for (const auto& f : spec.factors) {
    total_dim += factor_ambient_dim(f);
    total_rank += f.rank;
  }
  datum.ambient_dim = total_dim;
  datum.simple_roots = RatMat::Zero(total_dim, total_rank);
  datum.simple_coroots = RatMat::Zero(total_dim, total_rank);

  int offset = 0;
  int simple_begin = 0;
  for (const auto& fs : spec.factors) {
    Factor fac;
    fac.type = fs.type;
    fac.rank = fs.rank;
    fac.offset = offset;
    fac.dim = factor_ambient_dim(fs);
    fac.simple_begin = simple_begin;

    std::vector<RatVec> simples = simple_roots_for(fs);
    for (int i = 0; i < fac.rank; ++i) {
      datum.simple_roots.col(simple_begin + i).segment(offset, fac.dim) = simples[i];
      datum.simple_coroots.col(simple_begin + i).segment(offset, fac.dim) = coroot_of(simples[i]);
    }

    auto closure = reflection_closure(simples);
    if (static_cast<int>(closure.size()) != expected_root_count(fs))
      throw InvariantError("reflection closure has wrong cardinality for " + type_label(fac));

    Rational long_sq = dot(closure.front().first, closure.front().first);
    Rational short_sq = long_sq;
    for (const auto& [root, coeffs] : closure) {
      Rational nsq = dot(root, root);
      long_sq = std::max(long_sq, nsq);
      short_sq = std::min(short_sq, nsq);
    }
    fac.long_norm_sq = long_sq;
    fac.short_norm_sq = short_sq;
    fac.simply_laced = long_sq == short_sq;

    // highest (co)root: unique maximal height in the simple (co)root basis
    RatVec best_root, best_coroot;
    Rational best_height(-1), best_coheight(-1);
    std::vector<Rational> simple_norms;
    for (const auto& a : simples) simple_norms.push_back(dot(a, a));
    for (const auto& [root, coeffs] : closure) {
      Rational h(0);
      for (int i = 0; i < fac.rank; ++i) h += coeffs[i];
      if (h > best_height) {
        best_height = h;
        best_root = root;
      }
      Rational nsq = dot(root, root);
      Rational ch(0);
      for (int i = 0; i < fac.rank; ++i) ch += coeffs[i] * simple_norms[i] / nsq;
      if (ch > best_coheight) {
        best_coheight = ch;
        best_coroot = coroot_of(root);
      }
    }

    auto coefficients = [&](const RatVec& target, const RatMat& basis) {
      auto x = solve_consistent(basis, target);
      if (!x) throw InvariantError("failed to decompose highest (co)root");
      return *x;
    };
    RatMat S(fac.dim, fac.rank), Sv(fac.dim, fac.rank);
    for (int i = 0; i < fac.rank; ++i) {
      S.col(i) = simples[i];
      Sv.col(i) = coroot_of(simples[i]);
    }
    RatVec mcoeff = coefficients(best_root, S);
    RatVec mvcoeff = coefficients(best_coroot, Sv);
    for (int i = 0; i < fac.rank; ++i) {
      if (!mcoeff[i].is_integer() || mcoeff[i] < Rational(1) || !mvcoeff[i].is_integer() ||
          mvcoeff[i] < Rational(1))
        throw InvariantError("highest (co)root multiplicities must be positive integers");
      fac.vertices.m.push_back(mcoeff[i].num());
      fac.vertices.m_dual.push_back(mvcoeff[i].num());
      fac.vertices.special.push_back(mcoeff[i] == Rational(1));
      fac.vertices.cospecial.push_back(mvcoeff[i] == Rational(1));
    }

    fac.highest_root = RatVec::Zero(total_dim);
    fac.highest_root.segment(offset, fac.dim) = best_root;
    fac.highest_coroot = RatVec::Zero(total_dim);
    fac.highest_coroot.segment(offset, fac.dim) = best_coroot;
    fac.coroot_of_highest_root = RatVec::Zero(total_dim);
    fac.coroot_of_highest_root.segment(offset, fac.dim) = coroot_of(best_root);

    // canonical root order within the factor: lexicographic
    std::vector<RatVec> factor_roots;
    for (const auto& [root, coeffs] : closure) factor_roots.push_back(root);
    std::sort(factor_roots.begin(), factor_roots.end(), LexLess{});
    for (const auto& root : factor_roots) {
      RatVec full = RatVec::Zero(total_dim);
      full.segment(offset, fac.dim) = root;
      datum.roots.push_back(full);
      RatVec cofull = RatVec::Zero(total_dim);
      cofull.segment(offset, fac.dim) = coroot_of(root);
      datum.coroots.push_back(cofull);
      datum.root_factor.push_back(static_cast<int>(datum.factors.size()));
    }

    datum.factors.push_back(std::move(fac));
    offset += datum.factors.back().dim;
    simple_begin += fs.rank;
  }

  datum.fundamental_weights = fundamental_basis(datum.simple_roots, datum.simple_coroots);
  datum.fundamental_coweights = fundamental_basis(datum.simple_coroots, datum.simple_roots);

  switch (spec.char_lattice.kind) {
    case LatticeKind::SimplyConnected: datum.char_lattice = datum.fundamental_weights; break;
    case LatticeKind::Adjoint: datum.char_lattice = datum.simple_roots; break;
    case LatticeKind::Explicit: datum.char_lattice = spec.char_lattice.basis; break;
  }
  switch (spec.cochar_lattice.kind) {
    case LatticeKind::SimplyConnected: datum.cochar_lattice = datum.simple_coroots; break;
    case LatticeKind::Adjoint: datum.cochar_lattice = datum.fundamental_coweights; break;
    case LatticeKind::Explicit: datum.cochar_lattice = spec.cochar_lattice.basis; break;
  }
  if (spec.char_lattice.kind == LatticeKind::Explicit)
    validate_explicit_lattice(datum, datum.char_lattice, Side::Character, "character");
  if (spec.cochar_lattice.kind == LatticeKind::Explicit)
    validate_explicit_lattice(datum, datum.cochar_lattice, Side::Cocharacter, "cocharacter");

  datum.root_lookup = make_lookup(datum.roots);
  datum.coroot_lookup = make_lookup(datum.coroots);

  // datum-level pairing invariants
  for (int i = 0; i < datum.num_roots(); ++i) {
    if (dot(datum.roots[i], datum.coroots[i]) != Rational(2))
      throw InvariantError("<alpha, alpha^v> != 2");
  }
  RatMat cartan = cartan_matrix(datum);
  for (int i = 0; i < datum.rank(); ++i) {
    for (int j = 0; j < datum.rank(); ++j) {
      const Rational& a = cartan(i, j);
      if (!a.is_integer()) throw InvariantError("Cartan matrix entry not integral");
      if (i == j && a != Rational(2)) throw InvariantError("Cartan diagonal != 2");
      if (i != j && a > Rational(0)) throw InvariantError("positive off-diagonal Cartan entry");
    }
  }
  return datum;
}

const VertexData& vertex_data(const RootDatum& datum, int factor) {
  if (factor < 0 || factor >= static_cast<int>(datum.factors.size()))
    throw SpecError("factor index out of range: " + std::to_string(factor));
  return datum.factors[factor].vertices;
}

LatticeVector fundamental_weight(const RootDatum& datum, int alpha) {
  if (alpha < 0 || alpha >= datum.rank())
    throw SpecError("not a simple root index: " + std::to_string(alpha));
  return {datum.fundamental_weights.col(alpha), Side::Character};
}

LatticeVector fundamental_coweight(const RootDatum& datum, int alpha) {
  if (alpha < 0 || alpha >= datum.rank())
    throw SpecError("not a simple root index: " + std::to_string(alpha));
  return {datum.fundamental_coweights.col(alpha), Side::Cocharacter};
}

std::vector<int> coroot_chain(const RootDatum& datum, int factor) {
  const Factor& fac = datum.factors.at(factor);
  const auto& mv = fac.vertices.m_dual;
  int target_len = 0;
  for (auto m : mv) target_len += static_cast<int>(m);

  std::vector<int> chain;
  std::vector<std::int64_t> used(fac.rank, 0);
  std::set<RatVec, LexLess> dead;  // prefix sums known not to extend to a full chain
  RatVec sum = RatVec::Zero(datum.ambient_dim);

  // depth-first, lowest Bourbaki index first; prefix sums must stay coroots
  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(chain.size()) == target_len) return true;
    for (int i = 0; i < fac.rank; ++i) {
      if (used[i] >= mv[i]) continue;
      int g = fac.simple_begin + i;
      RatVec next = sum + datum.simple_coroots.col(g);
      if (datum.coroot_index(next) < 0) continue;
      if (dead.count(next)) continue;
      chain.push_back(g);
      used[i]++;
      std::swap(sum, next);
      if (self(self)) return true;
      std::swap(sum, next);
      used[i]--;
      chain.pop_back();
      dead.insert(next);
    }
    return false;
  };
  if (!dfs(dfs)) throw InvariantError("no coroot chain found for " + type_label(fac));
  if (!vec_eq(sum, fac.highest_coroot))
    throw InvariantError("coroot chain does not end at the highest coroot");
  return chain;
}

std::optional<RatVec> lattice_coords(const RootDatum& datum, const RatVec& v, Side side) {
  return solve_consistent(datum.lattice(side), v);
}

bool in_lattice(const RootDatum& datum, const RatVec& v, Side side) {
  auto coords = lattice_coords(datum, v, side);
  return coords && is_integral_vec(*coords);
}

RatMat cartan_matrix(const RootDatum& datum) {
  return datum.simple_coroots.transpose() * datum.simple_roots;
}

std::string type_label(const Factor& factor) {
  return std::string(1, factor.type) + std::to_string(factor.rank);
}

std::string datum_label(const RootDatum& datum) {
  std::string out;
  for (size_t i = 0; i < datum.factors.size(); ++i) {
    if (i) out += "x";
    out += type_label(datum.factors[i]);
  }
  return out;
}

}  // namespace qc
