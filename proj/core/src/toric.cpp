#include "mld/toric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "mld/errors.hpp"

namespace mld {

namespace {

Integer binomial(std::size_t s, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), s, k);
  return r;
}

// Calls f on every k-subset of {0..s-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t s, std::size_t k, F&& f) {
  if (k > s) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == s - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void require_interior(const LatticeVector& a, const HilbertBasis& hb) {
  if (a.rank() != hb.dual.ambient_rank()) throw InputError("point rank does not match the cone");
  for (const auto& u : hb.dual.rays()) {
    if (pairing(u, a) <= 0) {
      throw InputError("point " + a.to_string() + " is not in the interior of the cone");
    }
  }
}

// A point with Φ = n for a simplicial cone having a smooth facet: in a basis
// (v_1..v_{n-1}, w) with v_n = Σ c_i v_i + t w, take a_i = ⌊c_i/t⌋ + 1 and
// a_n = 1; the functionals w* and e_i* + ⌈-c_i/t⌉ w* all pair to 1.
std::optional<LatticeVector> unit_phi_point(const Cone& c) {
  const std::size_t n = c.ambient_rank();
  const auto& rays = c.rays();
  if (rays.size() != n) return std::nullopt;
  for (std::size_t omit = n; omit-- > 0;) {
    std::vector<LatticeVector> facet;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != omit) facet.push_back(rays[i]);
    }
    SublatticeBasis sat(facet, n);
    std::vector<LatticeVector> coords;
    for (const auto& v : facet) coords.push_back(sat.coordinates(v));
    if (abs(determinant(coords)) != 1) continue;

    LatticeVector w = sat.complement().front();
    std::vector<LatticeVector> m = facet;
    m.push_back(w);
    const Integer det = determinant(m);
    const std::vector<LatticeVector> adj = adjugate(m);
    std::vector<Integer> coef(n, Integer(0));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) coef[j] += rays[omit][i] * adj[i][j];
      coef[j] /= det;
    }
    Integer t = coef[n - 1];
    if (t < 0) {
      w = -w;
      t = -t;
    }
    LatticeVector a = w;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      a = a + facet[j].scaled(floor(Rational(coef[j], t)) + 1);
    }
    return a;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(FastPath p) {
  switch (p) {
    case FastPath::kNone:
      return "none";
    case FastPath::kSmooth:
      return "smooth";
    case FastPath::kSurface:
      return "surface";
    case FastPath::kSimplicialIsolated:
      return "simplicial_isolated";
  }
  return "none";
}

PhiWitness phi_greedy(const LatticeVector& a, const HilbertBasis& hb) {
  require_interior(a, hb);
  const std::size_t n = a.rank();
  std::vector<std::pair<Integer, const LatticeVector*>> order;
  order.reserve(hb.elements.size());
  for (const auto& u : hb.elements) order.emplace_back(pairing(u, a), &u);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    const int c = cmp(x.first, y.first);
    return c != 0 ? c < 0 : *x.second < *y.second;
  });

  PhiWitness w{a, Integer(0), {}};
  for (const auto& [p, u] : order) {
    w.chosen.push_back(*u);
    if (rank_of(w.chosen) < w.chosen.size()) {
      w.chosen.pop_back();
      continue;
    }
    w.value += p;
    if (w.chosen.size() == n) break;
  }
  if (w.chosen.size() != n) throw std::logic_error("Hilbert basis does not span the lattice");
  return w;
}

PhiWitness phi_bruteforce(const LatticeVector& a, const HilbertBasis& hb, std::uint64_t max_subsets) {
  require_interior(a, hb);
  const std::size_t n = a.rank();
  const std::size_t s = hb.elements.size();
  if (binomial(s, n) > Integer(static_cast<unsigned long>(max_subsets))) {
    throw LimitExceeded("brute-force Φ would examine " + binomial(s, n).get_str() +
                        " subsets; use the greedy evaluation instead");
  }
  std::vector<Integer> pair(s);
  for (std::size_t i = 0; i < s; ++i) pair[i] = pairing(hb.elements[i], a);

  std::optional<PhiWitness> best;
  for_each_subset(s, n, [&](const std::vector<std::size_t>& idx) {
    Integer v = 0;
    std::vector<LatticeVector> set;
    for (std::size_t i : idx) {
      v += pair[i];
      set.push_back(hb.elements[i]);
    }
    if (best && v >= best->value) return;
    if (rank_of(set) != n) return;
    best = PhiWitness{a, v, std::move(set)};
  });
  if (!best) throw std::logic_error("Hilbert basis does not span the lattice");
  return *best;
}

ToricMldReport minimize_phi(const Cone& c, const MinimizeOptions& options) {
  if (!c.is_full_dimensional()) {
    throw InputError("minimize_phi needs a full-dimensional cone; split the torus factor first");
  }
  const std::size_t n = c.ambient_rank();
  const HilbertBasis hb = hilbert_basis(dual_cone(c));

  ToricMldReport rep;
  rep.ambient_dimension = n;
  rep.reduced_dimension = n;
  rep.hilbert_basis_size = hb.elements.size();

  if (options.use_fast_paths) {
    FastPath path = FastPath::kNone;
    if (is_smooth(c)) {
      path = FastPath::kSmooth;
    } else if (n == 2) {
      path = FastPath::kSurface;
    } else if (is_simplicial(c) && has_isolated_fixed_point(c)) {
      path = FastPath::kSimplicialIsolated;
    }
    if (path != FastPath::kNone) {
      const std::optional<LatticeVector> a = unit_phi_point(c);
      if (!a) throw std::logic_error("fast path fired without a smooth facet");
      PhiWitness w = phi_greedy(*a, hb);
      if (w.value != static_cast<long>(n)) throw std::logic_error("fast-path witness has Φ != n");
      rep.lambda = 0;
      rep.mather_mld = static_cast<long>(n);
      rep.search_bound_used = w.value;
      rep.witness = std::move(w);
      rep.fast_path = path;
      return rep;
    }
  }

  const std::size_t s = hb.elements.size();
  const Integer subsets = binomial(s, n);
  if (subsets > Integer(static_cast<unsigned long>(options.max_subsets))) {
    throw LimitExceeded("search over " + subsets.get_str() + " subsets of a Hilbert basis of size " +
                        std::to_string(s) + " exceeds the limit of " +
                        std::to_string(options.max_subsets));
  }

  PhiWitness best = phi_greedy(c.ray_sum(), hb);
  rep.search_bound_used = best.value;

  // Region J is {a interior : ⟨t_J, a⟩ <= B} with t_J the sum over J. When
  // t_J - t_K lies in σ∨ the region of J sits inside that of K, so only the
  // minimal sums need enumerating.
  std::set<LatticeVector> sums;
  for_each_subset(s, n, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticeVector> set;
    for (std::size_t i : idx) set.push_back(hb.elements[i]);
    if (rank_of(set) != n) return;
    ++rep.subsets_examined;
    LatticeVector total = LatticeVector::zero(n);
    for (const auto& u : set) total = total + u;
    sums.insert(std::move(total));
  });
  std::vector<std::pair<Integer, LatticeVector>> graded;
  for (const auto& t : sums) graded.emplace_back(pairing(t, hb.grading), t);
  std::stable_sort(graded.begin(), graded.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<LatticeVector> minimal;
  for (const auto& [g, t] : graded) {
    const bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const LatticeVector& k) {
      return hb.dual.contains(t - k);
    });
    if (!dominated) minimal.push_back(t);
  }

  std::vector<HalfSpace> interior;
  for (const auto& w : hb.dual.rays()) interior.push_back({w, Integer(1)});
  std::set<LatticeVector> seen;
  std::vector<Integer> pairs;
  for (const auto& total : minimal) {
    std::vector<HalfSpace> hs = interior;
    hs.push_back({-total, Integer(-best.value)});
    for (const auto& a : enumerate_lattice_points(RationalPolytope(n, std::move(hs)))) {
      if (!seen.insert(a).second) continue;
      // Φ(a) is at least the sum of the n smallest pairings.
      pairs.clear();
      for (const auto& u : hb.elements) pairs.push_back(pairing(u, a));
      std::partial_sort(pairs.begin(), pairs.begin() + static_cast<long>(n), pairs.end());
      Integer lower = 0;
      for (std::size_t i = 0; i < n; ++i) lower += pairs[i];
      if (lower > best.value) continue;
      PhiWitness w = phi_greedy(a, hb);
      if (w.value < best.value || (w.value == best.value && a < best.point)) best = std::move(w);
    }
  }

  rep.lambda = best.value - static_cast<long>(n);
  rep.mather_mld = best.value;
  rep.witness = std::move(best);
  return rep;
}

OrbitDimension orbit_dimension(const LatticeVector& a, std::int64_t m, const HilbertBasis& hb) {
  if (m < 1) throw InputError("jet order m must be at least 1");
  const PhiWitness w = phi_greedy(a, hb);
  OrbitDimension out;
  out.threshold = 0;
  for (const auto& u : w.chosen) out.threshold = std::max(out.threshold, pairing(u, a));
  const Integer mm = static_cast<long>(m);
  const Integer top = (mm + 1) * static_cast<long>(a.rank());
  out.lower = top - w.value;
  out.exact = mm >= out.threshold;
  out.upper = out.exact ? out.lower : Integer(top - mm);
  return out;
}

ToricMldReport mld_at_point(const Cone& c, const std::optional<FaceSpec>& face,
                            const MinimizeOptions& options) {
  const std::size_t n = c.ambient_rank();
  Cone reduced = c;
  std::vector<std::size_t> rays;
  if (face) {
    rays = face_ray_indices(c, *face);
    if (rays.empty()) {
      ToricMldReport rep;
      rep.lambda = 0;
      rep.mather_mld = static_cast<long>(n);
      rep.search_bound_used = 0;
      rep.fast_path = FastPath::kSmooth;
      rep.ambient_dimension = n;
      rep.reduced_dimension = 0;
      rep.torus_factor_rank = n;
      rep.face_reduced_from = face;
      return rep;
    }
    reduced = face_cone(c, *face);
  } else {
    for (std::size_t i = 0; i < c.rays().size(); ++i) rays.push_back(i);
    reduced = split_torus_factor(c).cone;
  }
  ToricMldReport rep = minimize_phi(reduced, options);
  rep.ambient_dimension = n;
  rep.reduced_dimension = reduced.ambient_rank();
  rep.torus_factor_rank = n - reduced.ambient_rank();
  rep.mather_mld = rep.lambda + static_cast<long>(n);
  rep.face_reduced_from = face;
  rep.face_rays = std::move(rays);
  return rep;
}

}  // namespace mld
