#include "qc/classify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <thread>

namespace qc {

namespace {

/// Factor components merged along the Galois generators.
std::vector<int> factor_pieces(const RootDatum& datum, const GaloisAction& galois) {
  int n = static_cast<int>(datum.factors.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& fmap : galois.factor_maps) {
    for (int f = 0; f < n; ++f) {
      int a = find(f), b = find(fmap[f]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> piece(n);
  for (int f = 0; f < n; ++f) piece[f] = find(f);
  return piece;
}

ClassificationResult not_quasi_constant(const LatticeVector& v, const RootDatum& datum,
                                        const GaloisAction& galois, bool with_witness) {
  ClassificationResult res;
  res.quasi_constant = false;
  if (with_witness) {
    Verdict verdict = is_quasi_constant(v, datum, galois);
    if (verdict.value)
      throw InvariantError("structural classifier and defining predicate disagree");
    res.witness = verdict.witness;
  }
  return res;
}

}  // namespace

ClassificationResult classify_general(const LatticeVector& v, const RootDatum& datum,
                                      const GaloisAction& galois, bool with_witness) {
  ClassificationResult res;
  RatVec d = dominant_representative(v, datum).first.coords;

  std::vector<Rational> c(datum.rank());
  for (int i = 0; i < datum.rank(); ++i) c[i] = dot(d, datum.simple_dual(i, v.side));

  // per-factor shape: at most one nonzero fundamental coefficient
  int nfac = static_cast<int>(datum.factors.size());
  res.kinds.assign(nfac, {});
  std::vector<char> minuscule_cap(nfac, 0), cominuscule_cap(nfac, 0);
  bool all_trivial = true;
  for (int f = 0; f < nfac; ++f) {
    const Factor& fac = datum.factors[f];
    int vertex = -1;
    for (int i = fac.simple_begin; i < fac.simple_begin + fac.rank; ++i) {
      if (c[i].is_zero()) continue;
      if (vertex >= 0) return not_quasi_constant(v, datum, galois, with_witness);
      vertex = i;
    }
    if (vertex < 0) continue;
    all_trivial = false;
    int local = vertex - fac.simple_begin;
    bool min_cap = v.side == Side::Character ? fac.vertices.cospecial[local]
                                             : fac.vertices.special[local];
    bool com_cap = v.side == Side::Character ? fac.vertices.special[local]
                                             : fac.vertices.cospecial[local];
    if (!min_cap && !com_cap) return not_quasi_constant(v, datum, galois, with_witness);
    minuscule_cap[f] = min_cap;
    cominuscule_cap[f] = com_cap;
    res.kinds[f].vertex = vertex;
    res.kinds[f].multiplier = c[vertex];
  }

  if (all_trivial) {
    res.quasi_constant = true;
    res.multiplier = Rational(1);
    return res;
  }

  // per Galois piece: common multiplier, homogeneous kind
  std::vector<int> piece = factor_pieces(datum, galois);
  std::vector<int> roots_of_pieces;
  for (int f = 0; f < nfac; ++f)
    if (std::find(roots_of_pieces.begin(), roots_of_pieces.end(), piece[f]) ==
        roots_of_pieces.end())
      roots_of_pieces.push_back(piece[f]);

  for (int p : roots_of_pieces) {
    std::vector<int> members;
    for (int f = 0; f < nfac; ++f)
      if (piece[f] == p && res.kinds[f].vertex >= 0) members.push_back(f);
    if (members.empty()) continue;
    for (size_t k = 1; k < members.size(); ++k)
      if (res.kinds[members[k]].multiplier != res.kinds[members[0]].multiplier)
        return not_quasi_constant(v, datum, galois, with_witness);
    bool all_min = true, all_com = true;
    for (int f : members) {
      all_min = all_min && minuscule_cap[f];
      all_com = all_com && cominuscule_cap[f];
    }
    if (!all_min && !all_com) return not_quasi_constant(v, datum, galois, with_witness);
    KindTag tag = all_min ? KindTag::Minuscule : KindTag::Cominuscule;
    for (int f : members) res.kinds[f].tag = tag;
  }

  res.quasi_constant = true;
  std::optional<Rational> common;
  bool consistent = true;
  for (const auto& kind : res.kinds) {
    if (kind.tag == KindTag::Trivial) continue;
    if (!common)
      common = kind.multiplier;
    else if (*common != kind.multiplier)
      consistent = false;
  }
  if (consistent && common) res.multiplier = *common;
  return res;
}

ClassificationResult classify_simple(const LatticeVector& v, const RootDatum& datum) {
  if (!datum.irreducible()) throw SpecError("classify_simple needs an irreducible datum");
  return classify_general(v, datum, trivial_galois());
}

OracleContext::OracleContext(const RootDatum& datum, const GaloisAction& galois, Side side)
    : side_(side) {
  const auto& objects = datum.dual_objects(side);
  auto index_of = [&](const RatVec& w) {
    return side == Side::Character ? datum.coroot_index(w) : datum.root_index(w);
  };
  int n = static_cast<int>(objects.size());
  int r = datum.rank();
  orbit_of_.resize(n);
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen(n, 0);
    std::deque<int> queue;
    seen[a] = 1;
    queue.push_back(a);
    orbit_of_[a].push_back(a);
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      auto visit = [&](const RatVec& w) {
        int idx = index_of(w);
        if (idx < 0) throw InvariantError("oracle orbit left the (co)root set");
        if (!seen[idx]) {
          seen[idx] = 1;
          orbit_of_[a].push_back(idx);
          queue.push_back(idx);
        }
      };
      for (int j = 0; j < r; ++j) {
        Rational k = dot(objects[cur], datum.simple_coroots.col(j));
        visit(objects[cur] - datum.simple_roots.col(j) * k);
      }
      for (const auto& map : galois.maps) visit(map * objects[cur]);
    }
  }
}

bool OracleContext::quasi_constant(const std::vector<Rational>& pairings) const {
  for (size_t a = 0; a < orbit_of_.size(); ++a) {
    if (pairings[a].is_zero()) continue;
    Rational va = abs(pairings[a]);
    for (int b : orbit_of_[a]) {
      const Rational& pb = pairings[b];
      if (pb.is_zero()) continue;
      if (abs(pb) != va) return false;
    }
  }
  return true;
}

bool oracle_is_quasi_constant(const LatticeVector& v, const RootDatum& datum,
                              const GaloisAction& galois) {
  OracleContext ctx(datum, galois, v.side);
  const auto& objects = datum.dual_objects(v.side);
  std::vector<Rational> pairings(objects.size());
  for (size_t i = 0; i < objects.size(); ++i) pairings[i] = dot(v.coords, objects[i]);
  return ctx.quasi_constant(pairings);
}

namespace {

int resolve_threads(int requested, int slabs) {
  if (requested <= 0) {
    if (const char* env = std::getenv("QC_THREADS")) requested = std::atoi(env);
  }
  if (requested <= 0) requested = static_cast<int>(std::thread::hardware_concurrency());
  if (requested <= 0) requested = 1;
  return std::min(requested, slabs);
}

struct SlabResult {
  std::uint64_t qc = 0;
  std::uint64_t qc_nonzero = 0;
  std::vector<std::vector<std::int64_t>> mismatches;
  std::vector<RatVec> qc_rays;
};

std::string lattice_kind_label(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::SimplyConnected: return "sc";
    case LatticeKind::Adjoint: return "adjoint";
    case LatticeKind::Explicit: return "explicit";
  }
  return "?";
}

}  // namespace

BoxSearchReport verify_classification(const RootDatum& datum, const GaloisAction& galois,
                                      int bound, Side side, int threads) {
  if (bound < 1) throw SpecError("coefficient bound must be >= 1");
  auto start = std::chrono::steady_clock::now();

  const RatMat& basis = datum.lattice(side);
  int r = static_cast<int>(basis.cols());
  const auto& duals = datum.dual_objects(side);
  int nd = static_cast<int>(duals.size());

  // pairings are linear in the coefficients
  RatMat pairing_matrix(nd, r);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < r; ++j) pairing_matrix(i, j) = dot(basis.col(j), duals[i]);

  OracleContext oracle(datum, galois, side);

  int width = 2 * bound + 1;
  int slabs = width;
  int nthreads = resolve_threads(threads, slabs);
  std::vector<SlabResult> results(slabs);

  auto run_slab = [&](int slab) {
    SlabResult& out = results[slab];
    std::vector<std::int64_t> coeff(r, -bound);
    coeff[0] = slab - bound;
    std::vector<Rational> pairings(nd);
    for (;;) {
      RatVec v = RatVec::Zero(datum.ambient_dim);
      for (int j = 0; j < r; ++j)
        if (coeff[j] != 0) v += basis.col(j) * Rational(coeff[j]);
      LatticeVector lv{v, side};

      for (int i = 0; i < nd; ++i) {
        Rational acc(0);
        for (int j = 0; j < r; ++j)
          if (coeff[j] != 0) acc += pairing_matrix(i, j) * Rational(coeff[j]);
        pairings[i] = acc;
      }
      bool oracle_qc = oracle.quasi_constant(pairings);
      bool classified = classify_general(lv, datum, galois, false).quasi_constant;
      if (oracle_qc != classified)
        out.mismatches.emplace_back(coeff.begin(), coeff.end());
      if (oracle_qc) {
        out.qc++;
        if (!is_zero_vec(v)) {
          out.qc_nonzero++;
          RatVec d = dominant_representative(lv, datum).first.coords;
          out.qc_rays.push_back(primitive_integer_scale(d));
        }
      }

      int j = r - 1;
      while (j >= 1 && coeff[j] == bound) coeff[j--] = -bound;
      if (j < 1) break;
      coeff[j]++;
    }
  };

  if (nthreads <= 1) {
    for (int s = 0; s < slabs; ++s) run_slab(s);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t] {
        for (int s = t; s < slabs; s += nthreads) run_slab(s);
      });
    }
    for (auto& th : pool) th.join();
  }

  BoxSearchReport report;
  report.lattice_desc = datum_label(datum) + " " +
                        lattice_kind_label(side == Side::Character
                                               ? datum.spec.char_lattice.kind
                                               : datum.spec.cochar_lattice.kind) +
                        (side == Side::Character ? " characters" : " cocharacters");
  report.coeff_bound = bound;
  report.total = 1;
  for (int j = 0; j < r; ++j) report.total *= width;
  std::vector<RatVec> rays;
  for (const auto& slab : results) {
    report.quasi_constant_count += slab.qc;
    report.quasi_constant_nonzero += slab.qc_nonzero;
    for (const auto& m : slab.mismatches) report.mismatches.push_back(m);
    for (const auto& ray : slab.qc_rays) rays.push_back(ray);
  }
  std::sort(rays.begin(), rays.end(), LexLess{});
  rays.erase(std::unique(rays.begin(), rays.end(),
                         [](const RatVec& a, const RatVec& b) { return vec_eq(a, b); }),
             rays.end());
  report.qc_dominant_rays = std::move(rays);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qc
