#pragma once

// Brute-force reference implementations used only by the tests. They work on
// small machine integers and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mld/lattice.hpp"

namespace oracle {

using IVec = std::vector<long long>;

inline IVec to_ivec(const mld::LatticeVector& v) {
  IVec out;
  for (const auto& x : v.entries()) out.push_back(x.get_si());
  return out;
}

inline mld::LatticeVector to_lv(const IVec& v) {
  std::vector<mld::Integer> e;
  for (auto x : v) e.emplace_back(static_cast<long>(x));
  return mld::LatticeVector(std::move(e));
}

inline mld::Integer z(long long x) { return mld::Integer(static_cast<long>(x)); }

inline std::vector<mld::LatticeVector> to_lvs(const std::vector<IVec>& vs) {
  std::vector<mld::LatticeVector> out;
  for (const auto& v : vs) out.push_back(to_lv(v));
  return out;
}

inline long long dot(const IVec& a, const IVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IVec add(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline IVec sub(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline IVec primitive(IVec v) {
  long long g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

// Cofactor expansion; fine for n <= 4.
inline long long det(const std::vector<IVec>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<IVec> minor;
    for (std::size_t r = 1; r < n; ++r) {
      IVec row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const long long term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

// Rank by trying every square minor; n <= 4 and few vectors only.
inline std::size_t rank(const std::vector<IVec>& vs) {
  if (vs.empty()) return 0;
  const std::size_t n = vs[0].size();
  for (std::size_t r = std::min(n, vs.size()); r > 0; --r) {
    std::vector<bool> pick_rows(vs.size(), false);
    std::fill(pick_rows.begin(), pick_rows.begin() + static_cast<long>(r), true);
    do {
      std::vector<bool> pick_cols(n, false);
      std::fill(pick_cols.begin(), pick_cols.begin() + static_cast<long>(r), true);
      do {
        std::vector<IVec> m;
        for (std::size_t i = 0; i < vs.size(); ++i) {
          if (!pick_rows[i]) continue;
          IVec row;
          for (std::size_t k = 0; k < n; ++k) {
            if (pick_cols[k]) row.push_back(vs[i][k]);
          }
          m.push_back(row);
        }
        if (det(m) != 0) return r;
      } while (std::prev_permutation(pick_cols.begin(), pick_cols.end()));
    } while (std::prev_permutation(pick_rows.begin(), pick_rows.end()));
  }
  return 0;
}

// Every integer point of [-r, r]^n.
inline void for_box(std::size_t n, long long r, const std::function<void(const IVec&)>& f) {
  IVec x(n, -r);
  for (;;) {
    f(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < r) {
        ++x[i];
        break;
      }
      x[i] = -r;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

// Points of box satisfying ⟨normal, x⟩ >= offset for every (normal, offset).
inline std::vector<IVec> box_scan(const std::vector<std::pair<IVec, long long>>& ineqs, std::size_t n,
                                  long long r) {
  std::vector<IVec> out;
  for_box(n, r, [&](const IVec& x) {
    for (const auto& [a, b] : ineqs) {
      if (dot(a, x) < b) return;
    }
    out.push_back(x);
  });
  return out;
}

// Extreme rays of the dual of a full-dimensional cone in rank 2 or 3: every
// candidate normal through n-1 generators that is nonnegative on all of them.
inline std::vector<IVec> dual_rays(const std::vector<IVec>& gens) {
  const std::size_t n = gens[0].size();
  std::set<IVec> cands;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (n == 2) {
      cands.insert(primitive({-gens[i][1], gens[i][0]}));
      cands.insert(primitive({gens[i][1], -gens[i][0]}));
      continue;
    }
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const IVec& a = gens[i];
      const IVec& b = gens[j];
      IVec c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
      if (c == IVec{0, 0, 0}) continue;
      c = primitive(c);
      cands.insert(c);
      cands.insert({-c[0], -c[1], -c[2]});
    }
  }
  std::vector<IVec> out;
  for (const auto& u : cands) {
    std::vector<IVec> tight;
    bool ok = true;
    for (const auto& g : gens) {
      const long long p = dot(u, g);
      if (p < 0) ok = false;
      if (p == 0) tight.push_back(g);
    }
    if (ok && rank(tight) == n - 1) out.push_back(u);
  }
  return out;
}

// Hilbert basis of a simplicial cone cone(rays) by a sieve over the box that
// holds every element of the closed parallelepiped.
inline std::vector<IVec> naive_hilbert_simplicial(const std::vector<IVec>& rays) {
  const std::size_t n = rays.size();
  long long r = 0;
  for (const auto& v : rays) {
    long long m = 0;
    for (auto x : v) m = std::max(m, x < 0 ? -x : x);
    r += m;
  }
  const long long d = det(rays);
  // x is in the cone iff every Cramer numerator det(rays with row i := x) has
  // the sign of d.
  auto inside = [&](const IVec& x) {
    for (std::size_t i = 0; i < n; ++i) {
      auto m = rays;
      m[i] = x;
      const long long c = det(m);
      if ((d > 0 && c < 0) || (d < 0 && c > 0)) return false;
    }
    return true;
  };
  std::set<IVec> pts;
  for_box(n, r, [&](const IVec& x) {
    if (std::any_of(x.begin(), x.end(), [](long long v) { return v != 0; }) && inside(x)) pts.insert(x);
  });
  std::vector<IVec> out;
  for (const auto& u : pts) {
    bool reducible = false;
    for (const auto& v : pts) {
      if (v != u && pts.count(sub(u, v))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(u);
  }
  return out;
}

// Φ(a) over every linearly independent n-subset.
inline long long phi_exhaustive(const IVec& a, const std::vector<IVec>& hb) {
  const std::size_t n = a.size();
  long long best = -1;
  std::vector<bool> pick(hb.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
  do {
    std::vector<IVec> m;
    long long v = 0;
    for (std::size_t i = 0; i < hb.size(); ++i) {
      if (pick[i]) {
        m.push_back(hb[i]);
        v += dot(hb[i], a);
      }
    }
    if (det(m) != 0 && (best < 0 || v < best)) best = v;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

// Nonnegative integer combination of `basis` equal to p, by descending on a
// positive grading.
inline bool decomposes(const IVec& p, const std::vector<IVec>& basis, const std::vector<IVec>& dual_rays_of_cone,
                       std::map<IVec, bool>& memo) {
  if (std::all_of(p.begin(), p.end(), [](long long x) { return x == 0; })) return true;
  for (const auto& w : dual_rays_of_cone) {
    if (dot(w, p) < 0) return false;
  }
  auto it = memo.find(p);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (const auto& b : basis) {
    if (decomposes(sub(p, b), basis, dual_rays_of_cone, memo)) {
      ok = true;
      break;
    }
  }
  memo[p] = ok;
  return ok;
}

// Hypersurface objective from the definitions.
struct Obj {
  bool feasible = false;
  long long n0 = 0, n0_prime = 0, mu = 0, value = 0;
};

inline Obj objective(const std::vector<IVec>& support, const IVec& alpha) {
  Obj o;
  std::vector<long long> w;
  for (const auto& e : support) w.push_back(dot(alpha, e));
  o.n0 = *std::min_element(w.begin(), w.end());
  o.feasible = std::count(w.begin(), w.end(), o.n0) >= 2;
  o.mu = -1;
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (support[i][j] > 0) {
        const long long v = w[i] - alpha[j];
        if (o.mu < 0 || v < o.mu) o.mu = v;
      }
    }
  }
  long long s = 0;
  for (auto a : alpha) s += a - 1;
  o.value = s + 1 - o.n0 + o.mu;
  // j0: smallest variable attaining μ; n0' = min weight over monomials using it.
  std::size_t j0 = alpha.size();
  for (std::size_t j = 0; j < alpha.size() && j0 == alpha.size(); ++j) {
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (support[i][j] > 0 && w[i] - alpha[j] == o.mu) j0 = j;
    }
  }
  o.n0_prime = -1;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i][j0] > 0 && (o.n0_prime < 0 || w[i] < o.n0_prime)) o.n0_prime = w[i];
  }
  return o;
}

// min Obj over α in [1, r]^k, lexicographically smallest witness.
inline std::optional<std::pair<long long, IVec>> min_objective_box(const std::vector<IVec>& support, long long r) {
  const std::size_t k = support[0].size();
  std::optional<std::pair<long long, IVec>> best;
  IVec a(k, 1);
  for (;;) {
    const Obj o = objective(support, a);
    if (o.feasible && (!best || o.value < best->first)) best = std::make_pair(o.value, a);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (a[i] < r) {
        ++a[i];
        break;
      }
      a[i] = 1;
      if (i == 0) return best;
    }
  }
}

inline long long factorial(long long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace oracle
