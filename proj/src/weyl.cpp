#include "qc/weyl.hpp"

#include <deque>

namespace qc {

namespace {

constexpr size_t kOrbitCap = 20'000'000;

/// Linear map with alpha_i |-> alpha_{perm[i]}, identity on the orthogonal
/// complement of the root span.
RatMat induced_map(const RootDatum& datum, const std::vector<int>& perm) {
  int dim = datum.ambient_dim;
  int r = datum.rank();

  // extend the simple roots to an ambient basis by unit vectors
  RatMat basis(dim, dim);
  basis.leftCols(r) = datum.simple_roots;
  int added = r;
  for (int i = 0; i < dim && added < dim; ++i) {
    RatMat trial = basis.leftCols(added + 1);
    trial.col(added) = RatVec::Zero(dim);
    trial(i, added) = 1;
    Eigen::FullPivLU<RatMat> lu(trial);
    if (lu.rank() == added + 1) {
      basis.col(added) = trial.col(added);
      added++;
    }
  }
  if (added != dim) throw InvariantError("failed to extend root span to ambient basis");

  // complement vectors must be fixed modulo the root span; project them off
  // the span so the extension is the identity there
  RatMat span = datum.simple_roots;
  RatMat gram = span.transpose() * span;
  Eigen::FullPivLU<RatMat> gram_lu(gram);
  for (int c = r; c < dim; ++c) {
    RatVec y = gram_lu.solve(span.transpose() * basis.col(c));
    basis.col(c) = basis.col(c) - span * y;
  }

  RatMat image = basis;
  for (int i = 0; i < r; ++i) image.col(i) = datum.simple_roots.col(perm[i]);
  Eigen::FullPivLU<RatMat> lu(basis);
  return image * lu.solve(RatMat::Identity(dim, dim));
}

}  // namespace

GaloisAction make_galois(const RootDatum& datum, const std::vector<std::vector<int>>& perms) {
  GaloisAction action;
  int r = datum.rank();
  RatMat cartan = cartan_matrix(datum);
  for (const auto& perm : perms) {
    if (static_cast<int>(perm.size()) != r)
      throw SpecError("galois permutation must list images of all " + std::to_string(r) +
                      " simple roots");
    std::vector<bool> hit(r, false);
    for (int img : perm) {
      if (img < 0 || img >= r || hit[img])
        throw SpecError("galois entry is not a permutation of the simple-root indices");
      hit[img] = true;
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (cartan(perm[i], perm[j]) != cartan(i, j))
          throw SpecError("galois permutation does not preserve the Cartan matrix");

    RatMat map = induced_map(datum, perm);
    for (const auto& root : datum.roots) {
      if (datum.root_index(map * root) < 0)
        throw SpecError("galois permutation does not permute the roots");
    }
    for (const auto& coroot : datum.coroots) {
      if (datum.coroot_index(map * coroot) < 0)
        throw SpecError("galois permutation does not permute the coroots");
    }

    std::vector<int> fmap(datum.factors.size());
    for (size_t f = 0; f < datum.factors.size(); ++f)
      fmap[f] = datum.factor_of_simple(perm[datum.factors[f].simple_begin]);

    action.generators.push_back(perm);
    action.maps.push_back(std::move(map));
    action.factor_maps.push_back(std::move(fmap));
  }
  return action;
}

LatticeVector reflect(const LatticeVector& v, const RootDatum& datum, const RatVec& root) {
  if (datum.root_index(root) < 0) throw SpecError("reflect: vector is not a root");
  Rational nsq = dot(root, root);
  Rational k = dot(v.coords, root) * Rational(2) / nsq;
  return {v.coords - root * k, v.side};
}

RatVec reflect_by_index(const RatVec& v, const RootDatum& datum, int root_idx) {
  const RatVec& root = datum.roots[root_idx];
  Rational k = dot(v, datum.coroots[root_idx]);
  return v - root * k;
}

std::vector<RatVec> orbit(const LatticeVector& v, const RootDatum& datum,
                          const GaloisAction& galois, bool use_galois) {
  std::vector<RatVec> order;
  std::set<RatVec, LexLess> seen;
  std::deque<RatVec> queue;
  seen.insert(v.coords);
  order.push_back(v.coords);
  queue.push_back(v.coords);
  int r = datum.rank();
  while (!queue.empty()) {
    RatVec cur = queue.front();
    queue.pop_front();
    auto push = [&](RatVec&& w) {
      if (seen.insert(w).second) {
        order.push_back(w);
        queue.push_back(std::move(w));
        if (order.size() > kOrbitCap) throw InvariantError("orbit exceeds sanity cap");
      }
    };
    for (int j = 0; j < r; ++j) {
      Rational k = dot(cur, datum.simple_coroots.col(j));
      if (k.is_zero()) continue;
      push(cur - datum.simple_roots.col(j) * k);
    }
    if (use_galois) {
      for (const auto& map : galois.maps) push(map * cur);
    }
  }
  return order;
}

std::pair<LatticeVector, std::vector<int>> dominant_representative(const LatticeVector& v,
                                                                   const RootDatum& datum) {
  RatVec cur = v.coords;
  std::vector<int> word;
  int r = datum.rank();
  for (;;) {
    int violated = -1;
    for (int j = 0; j < r; ++j) {
      Rational p = dot(cur, datum.simple_dual(j, v.side));
      if (p < Rational(0)) {
        violated = j;
        break;
      }
    }
    if (violated < 0) break;
    Rational k = dot(cur, datum.simple_coroots.col(violated));
    cur = cur - datum.simple_roots.col(violated) * k;
    word.push_back(violated);
  }
  return {{cur, v.side}, word};
}

namespace {

OrbitPartition partition_of(const RootDatum& datum, const GaloisAction& galois, Side side) {
  const std::vector<RatVec>& objects = datum.dual_objects(side);
  auto index_of = [&](const RatVec& w) {
    return side == Side::Character ? datum.coroot_index(w) : datum.root_index(w);
  };
  OrbitPartition part;
  part.side = side == Side::Character ? Side::Cocharacter : Side::Character;
  std::vector<bool> visited(objects.size(), false);
  int r = datum.rank();
  for (size_t seed = 0; seed < objects.size(); ++seed) {
    if (visited[seed]) continue;
    std::vector<int> members;
    std::deque<int> queue;
    visited[seed] = true;
    members.push_back(static_cast<int>(seed));
    queue.push_back(static_cast<int>(seed));
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      auto visit = [&](const RatVec& w) {
        int idx = index_of(w);
        if (idx < 0) throw InvariantError("orbit left the (co)root set");
        if (!visited[idx]) {
          visited[idx] = true;
          members.push_back(idx);
          queue.push_back(idx);
        }
      };
      for (int j = 0; j < r; ++j) {
        // orthogonal reflection serves both sides
        Rational k = dot(objects[cur], datum.simple_coroots.col(j));
        visit(objects[cur] - datum.simple_roots.col(j) * k);
      }
      for (const auto& map : galois.maps) visit(map * objects[cur]);
    }
    part.orbits.push_back(std::move(members));
    part.representative.push_back(static_cast<int>(seed));
  }
  return part;
}

}  // namespace

OrbitPartition coroot_orbit_partition(const RootDatum& datum, const GaloisAction& galois) {
  return partition_of(datum, galois, Side::Character);
}

OrbitPartition root_orbit_partition(const RootDatum& datum, const GaloisAction& galois) {
  return partition_of(datum, galois, Side::Cocharacter);
}

OrbitPartition dual_orbit_partition(const RootDatum& datum, const GaloisAction& galois,
                                    Side side) {
  return partition_of(datum, galois, side);
}

std::set<Rational> pairing_value_set(const LatticeVector& chi,
                                     const std::vector<RatVec>& orbit_elements) {
  std::set<Rational> values;
  for (const auto& g : orbit_elements) values.insert(abs(dot(chi.coords, g)));
  return values;
}

std::vector<RatVec> orbit_vectors(const RootDatum& datum, const OrbitPartition& partition,
                                  int orbit_index) {
  const std::vector<RatVec>& objects =
      partition.side == Side::Cocharacter ? datum.coroots : datum.roots;
  std::vector<RatVec> out;
  for (int idx : partition.orbits.at(orbit_index)) out.push_back(objects[idx]);
  return out;
}

}  // namespace qc
