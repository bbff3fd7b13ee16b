#include "mld/cone.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "mld/errors.hpp"
#include "mld/linear_program.hpp"

namespace mld {

namespace {

// Columns of adj(G), signed so that ⟨g_i, r_j⟩ = |det G| δ_ij.
std::vector<LatticeVector> simplicial_dual(std::span<const LatticeVector> g) {
  const std::size_t n = g.size();
  const int sign = determinant(g) > 0 ? 1 : -1;
  const std::vector<LatticeVector> adj = adjugate(g);
  std::vector<LatticeVector> rays;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Integer> r(n);
    for (std::size_t l = 0; l < n; ++l) r[l] = adj[l][j] * sign;
    rays.push_back(LatticeVector(std::move(r)).primitive());
  }
  return rays;
}

// Extreme rays of {u : ⟨u,g⟩ >= 0 ∀g} for generators of a full-dimensional
// pointed cone in Z^n.
std::vector<LatticeVector> double_description(std::span<const LatticeVector> gens, std::size_t n) {
  std::vector<LatticeVector> basis_rows;
  for (const auto& g : gens) {
    basis_rows.push_back(g);
    if (rank_of(basis_rows) < basis_rows.size()) basis_rows.pop_back();
    if (basis_rows.size() == n) break;
  }
  if (basis_rows.size() != n) throw InputError("double description needs a full-rank generator set");

  std::vector<LatticeVector> rays = simplicial_dual(basis_rows);
  std::vector<LatticeVector> processed = basis_rows;

  for (const auto& v : gens) {
    std::vector<LatticeVector> pos, neg, next;
    for (const auto& r : rays) {
      const Integer s = pairing(v, r);
      if (s > 0) {
        pos.push_back(r);
      } else if (s < 0) {
        neg.push_back(r);
      } else {
        next.push_back(r);
      }
    }
    if (neg.empty()) {
      processed.push_back(v);
      continue;
    }
    next.insert(next.end(), pos.begin(), pos.end());
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        std::vector<LatticeVector> common;
        for (const auto& c : processed) {
          if (pairing(c, p) == 0 && pairing(c, q) == 0) common.push_back(c);
        }
        if (n >= 2 && rank_of(common) != n - 2) continue;
        LatticeVector r = q.scaled(pairing(v, p)) - p.scaled(pairing(v, q));
        next.push_back(r.primitive());
      }
    }
    rays = std::move(next);
    processed.push_back(v);
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

bool is_pointed(std::span<const LatticeVector> gens, std::size_t n) {
  std::vector<HalfSpace> hs;
  for (const auto& g : gens) hs.push_back({g, Integer(1)});
  return lp_feasible(n, hs);
}

}  // namespace

Cone::Cone(std::size_t ambient_rank, std::vector<LatticeVector> rays, SublatticeBasis span)
    : ambient_rank_(ambient_rank), rays_(std::move(rays)), span_(std::move(span)) {}

Cone Cone::from_generators(std::size_t n, std::vector<LatticeVector> generators) {
  if (n == 0) throw InputError("cone ambient rank must be positive");
  if (generators.empty()) throw InputError("cone needs at least one generator");
  for (auto& g : generators) {
    if (g.rank() != n) {
      throw InputError("generator " + g.to_string() + " has rank " + std::to_string(g.rank()) +
                       ", expected " + std::to_string(n));
    }
    if (g.is_zero()) throw InputError("zero ray generator");
    g = g.primitive();
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (!is_pointed(generators, n)) throw InputError("cone is not pointed (contains a line)");

  SublatticeBasis span(generators, n);
  const std::size_t k = span.rank();
  std::vector<LatticeVector> local;
  if (k == n) {
    local = generators;
  } else {
    for (const auto& g : generators) local.push_back(span.coordinates(g));
  }
  std::vector<LatticeVector> normals = double_description(local, k);

  std::vector<LatticeVector> extreme;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<LatticeVector> tight;
    for (const auto& f : normals) {
      if (pairing(f, local[i]) == 0) tight.push_back(f);
    }
    if (rank_of(tight) + 1 == k) extreme.push_back(generators[i]);
  }

  Cone c(n, std::move(extreme), std::move(span));
  c.facets_ = std::move(normals);
  return c;
}

bool Cone::contains(const LatticeVector& a, Membership mode) const {
  if (a.rank() != ambient_rank_) throw InputError("membership: rank mismatch");
  if (mode == Membership::kInterior && !is_full_dimensional()) {
    throw InputError("interior membership requires a full-dimensional cone");
  }
  LatticeVector local = a;
  if (!is_full_dimensional()) {
    if (!span_.contains(a)) return false;
    local = span_.coordinates(a);
  }
  for (const auto& f : facets_) {
    const Integer s = pairing(f, local);
    if (s < 0 || (mode == Membership::kInterior && s == 0)) return false;
  }
  return true;
}

LatticeVector Cone::ray_sum() const {
  LatticeVector s = LatticeVector::zero(ambient_rank_);
  for (const auto& r : rays_) s = s + r;
  return s;
}

Cone dual_cone(const Cone& c) {
  if (!c.is_full_dimensional()) {
    throw InputError("dual cone of a lower-dimensional cone is not pointed; split the torus factor first");
  }
  return Cone::from_generators(c.ambient_rank(), c.facet_normals());
}

bool membership(const Cone& c, const LatticeVector& a, Membership mode) { return c.contains(a, mode); }

std::size_t span_rank(const Cone& c) { return c.dimension(); }

TorusSplit split_torus_factor(const Cone& c) {
  if (c.is_full_dimensional()) return {c, 0};
  std::vector<LatticeVector> coords;
  for (const auto& r : c.rays()) coords.push_back(c.span_basis().coordinates(r));
  return {Cone::from_generators(c.dimension(), std::move(coords)), c.ambient_rank() - c.dimension()};
}

std::vector<std::size_t> face_ray_indices(const Cone& c, const FaceSpec& f) {
  const auto& rays = c.rays();
  if (const auto* ff = std::get_if<FunctionalFace>(&f)) {
    if (ff->functional.rank() != c.ambient_rank()) throw InputError("face functional rank mismatch");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const Integer s = pairing(ff->functional, rays[i]);
      if (s < 0) {
        throw InputError("functional " + ff->functional.to_string() +
                         " is not in the dual cone: negative on ray " + rays[i].to_string());
      }
      if (s == 0) out.push_back(i);
    }
    return out;
  }

  std::vector<std::size_t> subset = std::get<RaySubsetFace>(f).indices;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (std::size_t i : subset) {
    if (i >= rays.size()) throw InputError("face ray index " + std::to_string(i) + " out of range");
  }
  const std::set<std::size_t> in(subset.begin(), subset.end());
  std::vector<HalfSpace> base;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    base.push_back({rays[i], Integer(0)});
    if (in.count(i)) base.push_back({-rays[i], Integer(0)});
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (in.count(i)) continue;
    std::vector<HalfSpace> hs = base;
    hs.push_back({rays[i], Integer(1)});
    if (!lp_feasible(c.ambient_rank(), hs)) {
      throw InputError("ray subset is not a face: ray " + rays[i].to_string() +
                       " lies in the smallest face containing it");
    }
  }
  return subset;
}

Cone face_cone(const Cone& c, const FaceSpec& f) {
  const std::vector<std::size_t> idx = face_ray_indices(c, f);
  if (idx.empty()) throw InputError("the zero face has no cone of positive dimension");
  std::vector<LatticeVector> gens;
  for (std::size_t i : idx) gens.push_back(c.rays()[i]);
  return split_torus_factor(Cone::from_generators(c.ambient_rank(), std::move(gens))).cone;
}

std::vector<std::vector<std::size_t>> facets(const Cone& c) {
  std::vector<LatticeVector> local;
  for (const auto& r : c.rays()) {
    local.push_back(c.is_full_dimensional() ? r : c.span_basis().coordinates(r));
  }
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : c.facet_normals()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < local.size(); ++i) {
      if (pairing(f, local[i]) == 0) idx.push_back(i);
    }
    out.push_back(std::move(idx));
  }
  return out;
}

bool is_simplicial(const Cone& c) { return c.rays().size() == c.dimension(); }

bool is_smooth(const Cone& c) {
  if (!is_simplicial(c)) return false;
  std::vector<LatticeVector> local;
  for (const auto& r : c.rays()) {
    local.push_back(c.is_full_dimensional() ? r : c.span_basis().coordinates(r));
  }
  return abs(determinant(local)) == 1;
}

bool has_isolated_fixed_point(const Cone& c) {
  if (c.dimension() <= 1) return true;
  for (const auto& facet : facets(c)) {
    if (facet.empty()) continue;
    if (!is_smooth(face_cone(c, RaySubsetFace{facet}))) return false;
  }
  return true;
}

}  // namespace mld
