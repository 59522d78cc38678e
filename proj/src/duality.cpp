#include "qc/duality.hpp"

#include <algorithm>
#include <numeric>

namespace qc {

Ray make_ray(const LatticeVector& v, const RootDatum& datum) {
  if (is_zero_vec(v.coords)) throw SpecError("a ray needs a nonzero direction");
  auto coords = lattice_coords(datum, v.coords, v.side);
  if (!coords)
    throw SpecError("ray direction lies outside the rational span of the chosen lattice");
  RatVec primitive = primitive_integer_scale(*coords);
  return {datum.lattice(v.side) * primitive, v.side};
}

bool ray_eq(const Ray& a, const Ray& b) {
  return a.side == b.side && vec_eq(a.direction, b.direction);
}

LeviType centralizer_levi(const Ray& r, const RootDatum& datum) {
  LeviType levi;
  for (int i = 0; i < datum.rank(); ++i) {
    if (dot(datum.simple_roots.col(i), r.direction).is_zero()) levi.subset.push_back(i);
  }
  return levi;
}

namespace {

Ray dualize_impl(const Ray& r, const RootDatum& datum, const GaloisAction& galois,
                 Side expected_side) {
  if (r.side != expected_side)
    throw SpecError("ray is on the wrong side for this duality direction");
  for (int i = 0; i < datum.rank(); ++i) {
    if (dot(r.direction, datum.simple_dual(i, r.side)) < Rational(0))
      throw SpecError("ray is not dominant; take the dominant representative first");
  }
  if (!is_quasi_constant({r.direction, r.side}, datum, galois).value)
    throw SpecError("ray is not quasi-constant");

  const RatMat& out_basis = r.side == Side::Cocharacter ? datum.fundamental_weights
                                                        : datum.fundamental_coweights;
  RatVec image = RatVec::Zero(datum.ambient_dim);
  for (const auto& fac : datum.factors) {
    int vertex = -1;
    for (int i = fac.simple_begin; i < fac.simple_begin + fac.rank; ++i) {
      if (!dot(r.direction, datum.simple_dual(i, r.side)).is_zero()) {
        if (vertex >= 0)
          throw InvariantError("quasi-constant ray has two nonzero fundamental coefficients");
        vertex = i;
      }
    }
    if (vertex >= 0) image += out_basis.col(vertex);
  }
  if (is_zero_vec(image)) throw SpecError("central ray has no dual ray");
  return make_ray({image, dual_side(r.side)}, datum);
}

}  // namespace

Ray dualize_ray(const Ray& r, const RootDatum& datum, const GaloisAction& galois) {
  return dualize_impl(r, datum, galois, Side::Cocharacter);
}

Ray dualize_ray_inverse(const Ray& r, const RootDatum& datum, const GaloisAction& galois) {
  return dualize_impl(r, datum, galois, Side::Character);
}

std::vector<Ray> enumerate_quasi_constant_dominant_rays(const RootDatum& datum,
                                                        const GaloisAction& galois,
                                                        Side side) {
  int nfac = static_cast<int>(datum.factors.size());

  // group factors into Galois pieces
  std::vector<int> parent(nfac);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& fmap : galois.factor_maps)
    for (int f = 0; f < nfac; ++f) {
      int a = find(f), b = find(fmap[f]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> root_ids;
  for (int f = 0; f < nfac; ++f)
    if (find(f) == f) root_ids.push_back(f);
  std::vector<std::vector<int>> pieces(root_ids.size());
  for (int f = 0; f < nfac; ++f) {
    size_t p = std::lower_bound(root_ids.begin(), root_ids.end(), find(f)) - root_ids.begin();
    pieces[p].push_back(f);
  }

  auto capable = [&](const Factor& fac, int local, bool minuscule_kind) {
    if (side == Side::Cocharacter)
      return minuscule_kind ? fac.vertices.special[local] : fac.vertices.cospecial[local];
    return minuscule_kind ? fac.vertices.cospecial[local] : fac.vertices.special[local];
  };
  const RatMat& fund =
      side == Side::Cocharacter ? datum.fundamental_coweights : datum.fundamental_weights;

  // per piece: the empty selection, or a homogeneous-kind choice of at most
  // one capable vertex per factor, not all empty
  std::vector<std::vector<RatVec>> piece_options;
  for (const auto& piece : pieces) {
    std::vector<RatVec> options;
    options.push_back(RatVec::Zero(datum.ambient_dim));
    for (bool minuscule_kind : {true, false}) {
      std::vector<std::vector<int>> partial{{}};  // per factor: -1 or vertex
      for (int f : piece) {
        const Factor& fac = datum.factors[f];
        std::vector<std::vector<int>> next;
        for (const auto& sel : partial) {
          auto with = sel;
          with.push_back(-1);
          next.push_back(with);
          for (int local = 0; local < fac.rank; ++local) {
            if (!capable(fac, local, minuscule_kind)) continue;
            auto pick = sel;
            pick.push_back(fac.simple_begin + local);
            next.push_back(pick);
          }
        }
        partial = std::move(next);
      }
      for (const auto& sel : partial) {
        RatVec v = RatVec::Zero(datum.ambient_dim);
        bool nonzero = false;
        for (int vertex : sel)
          if (vertex >= 0) {
            v += fund.col(vertex);
            nonzero = true;
          }
        if (nonzero) options.push_back(std::move(v));
      }
    }
    piece_options.push_back(std::move(options));
  }

  // cartesian product over pieces
  std::vector<RatVec> sums{RatVec::Zero(datum.ambient_dim)};
  for (const auto& options : piece_options) {
    std::vector<RatVec> next;
    for (const auto& acc : sums)
      for (const auto& opt : options) next.push_back(acc + opt);
    sums = std::move(next);
  }

  std::vector<RatVec> directions;
  for (const auto& v : sums) {
    if (is_zero_vec(v)) continue;
    directions.push_back(make_ray({v, side}, datum).direction);
  }
  std::sort(directions.begin(), directions.end(), LexLess{});
  directions.erase(std::unique(directions.begin(), directions.end(),
                               [](const RatVec& a, const RatVec& b) { return vec_eq(a, b); }),
                   directions.end());

  std::vector<Ray> rays;
  for (auto& d : directions) rays.push_back({std::move(d), side});
  return rays;
}

DualityReport verify_duality(const RootDatum& datum, const GaloisAction& galois) {
  DualityReport report;
  auto cochar_rays = enumerate_quasi_constant_dominant_rays(datum, galois, Side::Cocharacter);
  auto char_rays = enumerate_quasi_constant_dominant_rays(datum, galois, Side::Character);

  auto check_one = [&](const Ray& ray, bool from_cochar) {
    RayCheck chk;
    chk.ray = ray;
    chk.input_quasi_constant = is_quasi_constant({ray.direction, ray.side}, datum, galois).value;
    chk.dual = from_cochar ? dualize_ray(ray, datum, galois)
                           : dualize_ray_inverse(ray, datum, galois);
    chk.dual_quasi_constant =
        is_quasi_constant({chk.dual.direction, chk.dual.side}, datum, galois).value;

    // the dual ray must vanish exactly on the Levi of the input's centralizer
    LeviType levi;
    for (int i = 0; i < datum.rank(); ++i)
      if (dot(ray.direction, datum.simple_dual(i, ray.side)).is_zero())
        levi.subset.push_back(i);
    bool restriction = true, maximal = true;
    for (int i = 0; i < datum.rank(); ++i) {
      Rational p = dot(chk.dual.direction, datum.simple_dual(i, chk.dual.side));
      if (levi.contains(i) && !p.is_zero()) restriction = false;
      if (!levi.contains(i) && p.is_zero()) maximal = false;
    }
    chk.levi_restriction = restriction;
    chk.levi_maximal = maximal;

    Ray back = from_cochar ? dualize_ray_inverse(chk.dual, datum, galois)
                           : dualize_ray(chk.dual, datum, galois);
    chk.involution = ray_eq(back, ray);
    return chk;
  };

  std::vector<RatVec> images;
  for (const auto& ray : cochar_rays) {
    RayCheck chk = check_one(ray, true);
    images.push_back(chk.dual.direction);
    report.cocharacter_checks.push_back(std::move(chk));
  }
  for (const auto& ray : char_rays) report.character_checks.push_back(check_one(ray, false));

  std::sort(images.begin(), images.end(), LexLess{});
  report.bijection = images.size() == char_rays.size();
  if (report.bijection) {
    for (size_t i = 0; i < images.size(); ++i)
      if (!vec_eq(images[i], char_rays[i].direction)) report.bijection = false;
  }

  report.all_ok = report.bijection;
  for (const auto& chk : report.cocharacter_checks) report.all_ok = report.all_ok && chk.ok();
  for (const auto& chk : report.character_checks) report.all_ok = report.all_ok && chk.ok();
  return report;
}

}  // namespace qc
