#pragma once

#include <string>
#include <vector>

#include "qc/linalg.hpp"

namespace qc {

enum class Side { Character, Cocharacter };

inline Side dual_side(Side s) {
  return s == Side::Character ? Side::Cocharacter : Side::Character;
}

/// Exact rational vector in the shared ambient space, tagged with the side
/// of the root datum it lives on.
struct LatticeVector {
  RatVec coords;
  Side side = Side::Character;
};

enum class LatticeKind { SimplyConnected, Adjoint, Explicit };

struct LatticeChoice {
  LatticeKind kind = LatticeKind::SimplyConnected;
  RatMat basis;  // columns are basis vectors; only read when kind == Explicit
};

struct FactorSpec {
  char type = 'A';  // one of A B C D E F G
  int rank = 1;
};

struct RootSystemSpec {
  std::vector<FactorSpec> factors;
  LatticeChoice char_lattice;
  LatticeChoice cochar_lattice;
};

/// Highest-root and highest-coroot multiplicities of one irreducible factor,
/// indexed by the factor's simple roots in Bourbaki order.
struct VertexData {
  std::vector<std::int64_t> m;       // highest root = sum m[i] * alpha_i
  std::vector<std::int64_t> m_dual;  // highest coroot = sum m_dual[i] * alpha_i^v
  std::vector<bool> special;         // m[i] == 1
  std::vector<bool> cospecial;       // m_dual[i] == 1
};

struct Factor {
  char type = 'A';
  int rank = 0;
  int offset = 0;        // first ambient coordinate of this factor's block
  int dim = 0;           // ambient coordinates occupied by the block
  int simple_begin = 0;  // global index of the factor's first simple root
  bool simply_laced = true;
  Rational long_norm_sq;   // (alpha, alpha) of a long root
  Rational short_norm_sq;  // (alpha, alpha) of a short root
  RatVec highest_root;
  RatVec highest_coroot;
  RatVec coroot_of_highest_root;
  VertexData vertices;
};

/// A root datum in the Bourbaki planche coordinates, with exact rational
/// roots and coroots and a chosen lattice on each side. Immutable once
/// built; all operations on it are pure.
struct RootDatum {
  RootSystemSpec spec;
  int ambient_dim = 0;
  std::vector<Factor> factors;
  RatMat simple_roots;    // ambient_dim x rank, column per simple root
  RatMat simple_coroots;  // aligned columns, alpha^v = 2 alpha / (alpha, alpha)
  std::vector<RatVec> roots;    // canonical order: by factor, then lexicographic
  std::vector<RatVec> coroots;  // coroots[i] dual to roots[i]
  std::vector<int> root_factor;
  RatMat char_lattice;    // ambient_dim x rank basis of the chosen lattice
  RatMat cochar_lattice;
  RatMat fundamental_weights;    // column i dual to simple coroot i
  RatMat fundamental_coweights;  // column i dual to simple root i

  int rank() const { return static_cast<int>(simple_roots.cols()); }
  int num_roots() const { return static_cast<int>(roots.size()); }
  bool irreducible() const { return factors.size() == 1; }

  int factor_of_simple(int alpha) const;
  /// Index into roots/coroots, or -1 when the vector is not a (co)root.
  int root_index(const RatVec& v) const;
  int coroot_index(const RatVec& v) const;
  const RatMat& lattice(Side side) const {
    return side == Side::Character ? char_lattice : cochar_lattice;
  }
  /// Simple pairing column: coroots for characters, roots for cocharacters.
  RatVec simple_dual(int alpha, Side side) const {
    return side == Side::Character ? simple_coroots.col(alpha) : simple_roots.col(alpha);
  }
  const std::vector<RatVec>& dual_objects(Side side) const {
    return side == Side::Character ? coroots : roots;
  }

  // built by qc::build
  std::vector<std::pair<RatVec, int>> root_lookup;    // sorted by LexLess
  std::vector<std::pair<RatVec, int>> coroot_lookup;  // sorted by LexLess
};

/// A subset of the simple roots, cutting out a Levi subgroup.
struct LeviType {
  std::vector<int> subset;  // sorted global simple-root indices

  bool contains(int alpha) const;
  std::vector<int> complement(int rank) const;
};

RootDatum build(const RootSystemSpec& spec);

const VertexData& vertex_data(const RootDatum& datum, int factor);

LatticeVector fundamental_weight(const RootDatum& datum, int alpha);
LatticeVector fundamental_coweight(const RootDatum& datum, int alpha);

/// Chain of simple-coroot indices whose prefix sums are all coroots and
/// whose total is the factor's highest coroot.
std::vector<int> coroot_chain(const RootDatum& datum, int factor);

/// Coordinates of v in the basis of the chosen lattice on the given side;
/// empty when v is outside the lattice's rational span.
std::optional<RatVec> lattice_coords(const RootDatum& datum, const RatVec& v, Side side);

/// True when v lies in the chosen lattice (integral lattice coordinates).
bool in_lattice(const RootDatum& datum, const RatVec& v, Side side);

/// Cartan matrix A(i, j) = <alpha_j, alpha_i^v>.
RatMat cartan_matrix(const RootDatum& datum);

std::string type_label(const Factor& factor);
std::string datum_label(const RootDatum& datum);

}  // namespace qc
