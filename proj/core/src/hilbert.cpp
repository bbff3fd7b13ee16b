#include "mld/hilbert.hpp"

#include <algorithm>
#include <utility>

#include "mld/errors.hpp"

namespace mld {

namespace {

std::vector<std::vector<std::size_t>> triangulate(const Cone& c, std::vector<std::size_t> face,
                                                  std::size_t dim) {
  if (face.size() == dim) return {face};
  const auto& rays = c.rays();
  const std::size_t apex = face.front();  // face is sorted, rays are lex sorted

  std::vector<std::vector<std::size_t>> subfaces;
  for (const auto& v : c.facet_normals()) {
    std::vector<std::size_t> sub;
    for (std::size_t i : face) {
      if (pairing(v, rays[i]) == 0) sub.push_back(i);
    }
    if (sub.size() == face.size() || sub.size() < dim - 1) continue;
    if (std::find(sub.begin(), sub.end(), apex) != sub.end()) continue;
    std::vector<LatticeVector> gens;
    for (std::size_t i : sub) gens.push_back(rays[i]);
    if (rank_of(gens) != dim - 1) continue;
    subfaces.push_back(std::move(sub));
  }
  std::sort(subfaces.begin(), subfaces.end());
  subfaces.erase(std::unique(subfaces.begin(), subfaces.end()), subfaces.end());

  std::vector<std::vector<std::size_t>> out;
  for (auto& sub : subfaces) {
    for (auto simplex : triangulate(c, sub, dim - 1)) {
      simplex.insert(simplex.begin(), apex);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

Integer grade(const LatticeVector& u, const LatticeVector& v0) { return pairing(u, v0); }

}  // namespace

std::vector<std::vector<std::size_t>> pulling_triangulation(const Cone& c) {
  if (!c.is_full_dimensional()) throw InputError("triangulation requires a full-dimensional cone");
  std::vector<std::size_t> all(c.rays().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto out = triangulate(c, all, c.ambient_rank());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> parallelepiped_points(std::span<const LatticeVector> rays) {
  const std::size_t n = rays.size();
  if (n == 0) return {};
  const std::size_t ambient = rays.front().rank();
  if (n != ambient || rank_of(rays) != n) {
    throw InputError("parallelepiped needs a square nonsingular ray matrix");
  }
  const SmithForm snf = smith_normal_form(rays, n);
  const Integer det = determinant(rays);

  // R^{-1} = adj / det, so λ = x·adj / det.
  const std::vector<LatticeVector> adj = adjugate(rays);

  std::vector<LatticeVector> out;
  std::vector<Integer> y(n, Integer(0));
  for (;;) {
    LatticeVector x = LatticeVector::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (y[i] != 0) x = x + snf.column_inverse[i].scaled(y[i]);
    }
    LatticeVector p = x;
    for (std::size_t j = 0; j < n; ++j) {
      Integer num = 0;
      for (std::size_t i = 0; i < n; ++i) num += x[i] * adj[i][j];
      const Integer fl = floor(Rational(num, det));
      if (fl != 0) p = p - rays[j].scaled(fl);
    }
    if (!p.is_zero()) out.push_back(std::move(p));

    std::size_t k = 0;
    while (k < n) {
      ++y[k];
      if (y[k] < snf.diagonal[k]) break;
      y[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HilbertBasis hilbert_basis(const Cone& dual) {
  if (!dual.is_full_dimensional()) {
    throw InputError("Hilbert basis requires a full-dimensional dual cone; reduce the cone first");
  }
  LatticeVector v0 = LatticeVector::zero(dual.ambient_rank());
  for (const auto& v : dual.facet_normals()) v0 = v0 + v;

  std::vector<LatticeVector> candidates(dual.rays());
  for (const auto& simplex : pulling_triangulation(dual)) {
    std::vector<LatticeVector> rays;
    for (std::size_t i : simplex) rays.push_back(dual.rays()[i]);
    for (auto& p : parallelepiped_points(rays)) candidates.push_back(std::move(p));
  }
  std::sort(candidates.begin(), candidates.end(), [&](const LatticeVector& a, const LatticeVector& b) {
    const int c = cmp(grade(a, v0), grade(b, v0));
    return c != 0 ? c < 0 : a < b;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<LatticeVector> elements;
  for (const auto& u : candidates) {
    const Integer gu = grade(u, v0);
    bool reducible = false;
    for (const auto& v : elements) {
      if (grade(v, v0) >= gu) break;
      if (dual.contains(u - v)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) elements.push_back(u);
  }
  std::sort(elements.begin(), elements.end());
  return {dual, std::move(elements), std::move(v0)};
}

bool is_irreducible(const LatticeVector& u, std::span<const LatticeVector> candidates,
                    const Cone& dual) {
  if (!dual.contains(u)) throw InputError(u.to_string() + " is not in the cone");
  if (u.is_zero()) return false;
  for (const auto& v : candidates) {
    if (v == u || v.is_zero()) continue;
    if (!dual.contains(v)) continue;
    if (dual.contains(u - v)) return false;
  }
  return true;
}

bool is_irreducible(const LatticeVector& u, const Cone& dual) {
  if (!dual.contains(u)) throw InputError(u.to_string() + " is not in the cone");
  if (u.is_zero()) return false;
  if (!dual.is_full_dimensional()) throw InputError("irreducibility test requires a full-dimensional cone");
  LatticeVector v0 = LatticeVector::zero(dual.ambient_rank());
  for (const auto& v : dual.facet_normals()) v0 = v0 + v;

  std::vector<HalfSpace> hs;
  for (const auto& w : dual.facet_normals()) hs.push_back({w, Integer(0)});
  hs.push_back({-v0, Integer(1) - pairing(u, v0)});
  const auto points = enumerate_lattice_points(RationalPolytope(dual.ambient_rank(), hs));
  return is_irreducible(u, points, dual);
}

}  // namespace mld
