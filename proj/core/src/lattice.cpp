#include "mld/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "mld/errors.hpp"
#include "mld/linear_program.hpp"

namespace mld {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

void require_same_rank(std::span<const LatticeVector> vectors, std::size_t rank) {
  for (const auto& v : vectors) {
    if (v.rank() != rank) {
      throw InputError("rank mismatch: expected vectors of rank " + std::to_string(rank) +
                       ", got " + std::to_string(v.rank()));
    }
  }
}

IntMatrix to_matrix(std::span<const LatticeVector> rows) {
  IntMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(r.entries());
  return m;
}

// Bareiss elimination in place; returns the rank and, for square input, the
// determinant (up to the sign tracked through row swaps).
std::size_t bareiss(IntMatrix& a, std::size_t cols, Integer* det) {
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t rank = 0;
  int sign = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) {
      if (det != nullptr) *det = 0;
      continue;
    }
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  if (det != nullptr) {
    if (rank == rows && rows == cols) {
      *det = sign * a[rows - 1][cols - 1];
    } else {
      *det = 0;
    }
  }
  return rank;
}

}  // namespace

// ---------------------------------------------------------------- LatticeVector

LatticeVector::LatticeVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}

LatticeVector::LatticeVector(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long e : entries) entries_.emplace_back(e);
}

LatticeVector LatticeVector::zero(std::size_t rank) {
  return LatticeVector(std::vector<Integer>(rank, Integer(0)));
}

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t index) {
  std::vector<Integer> e(rank, Integer(0));
  e.at(index) = 1;
  return LatticeVector(std::move(e));
}

bool LatticeVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& x : entries_) g = gcd(g, x);
  return g;
}

LatticeVector LatticeVector::primitive() const {
  const Integer g = content();
  if (g == 0 || g == 1) return *this;
  std::vector<Integer> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.emplace_back(x / g);
  return LatticeVector(std::move(e));
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  if (o.rank() != rank()) throw InputError("rank mismatch in vector addition");
  std::vector<Integer> e(rank());
  for (std::size_t i = 0; i < rank(); ++i) e[i] = entries_[i] + o.entries_[i];
  return LatticeVector(std::move(e));
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  if (o.rank() != rank()) throw InputError("rank mismatch in vector subtraction");
  std::vector<Integer> e(rank());
  for (std::size_t i = 0; i < rank(); ++i) e[i] = entries_[i] - o.entries_[i];
  return LatticeVector(std::move(e));
}

LatticeVector LatticeVector::operator-() const { return scaled(Integer(-1)); }

LatticeVector LatticeVector::scaled(const Integer& k) const {
  std::vector<Integer> e(rank());
  for (std::size_t i = 0; i < rank(); ++i) e[i] = entries_[i] * k;
  return LatticeVector(std::move(e));
}

bool LatticeVector::operator==(const LatticeVector& o) const { return entries_ == o.entries_; }

std::strong_ordering LatticeVector::operator<=>(const LatticeVector& o) const {
  if (rank() != o.rank()) return rank() <=> o.rank();
  for (std::size_t i = 0; i < rank(); ++i) {
    const int c = cmp(entries_[i], o.entries_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

// ---------------------------------------------------------------- basic ops

Integer pairing(const LatticeVector& u, const LatticeVector& a) {
  if (u.rank() != a.rank()) {
    throw InputError("pairing: rank mismatch (" + std::to_string(u.rank()) + " vs " +
                     std::to_string(a.rank()) + ")");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < u.rank(); ++i) s += u[i] * a[i];
  return s;
}

std::size_t rank_of(std::span<const LatticeVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().rank();
  require_same_rank(vectors, n);
  IntMatrix m = to_matrix(vectors);
  return bareiss(m, n, nullptr);
}

Integer determinant(std::span<const LatticeVector> rows) {
  if (rows.empty()) return 1;
  const std::size_t n = rows.size();
  require_same_rank(rows, n);
  IntMatrix m = to_matrix(rows);
  Integer det;
  bareiss(m, n, &det);
  return det;
}

std::vector<LatticeVector> adjugate(std::span<const LatticeVector> rows) {
  const std::size_t n = rows.size();
  require_same_rank(rows, n);
  std::vector<std::vector<Integer>> adj(n, std::vector<Integer>(n, Integer(1)));
  if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // adj[i][j] = (-1)^{i+j} * minor(row j, column i)
        std::vector<LatticeVector> minor;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == j) continue;
          std::vector<Integer> row;
          for (std::size_t c = 0; c < n; ++c) {
            if (c != i) row.push_back(rows[r][c]);
          }
          minor.emplace_back(std::move(row));
        }
        Integer m = determinant(minor);
        adj[i][j] = ((i + j) % 2 == 0) ? m : Integer(-m);
      }
    }
  }
  std::vector<LatticeVector> out;
  for (auto& r : adj) out.emplace_back(std::move(r));
  return out;
}

// ---------------------------------------------------------------- Smith form

SmithForm smith_normal_form(std::span<const LatticeVector> rows, std::size_t n) {
  require_same_rank(rows, n);
  IntMatrix a = to_matrix(rows);
  const std::size_t k = a.size();
  IntMatrix w(n, std::vector<Integer>(n, Integer(0)));
  IntMatrix winv = w;
  for (std::size_t i = 0; i < n; ++i) w[i][i] = winv[i][i] = 1;

  // Column operations are mirrored on W (same op) and W^{-1} (inverse row op).
  auto col_addmul = [&](std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < k; ++i) a[i][dst] += q * a[i][src];
    for (std::size_t i = 0; i < n; ++i) w[i][dst] += q * w[i][src];
    for (std::size_t j = 0; j < n; ++j) winv[src][j] -= q * winv[dst][j];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < k; ++i) std::swap(a[i][x], a[i][y]);
    for (std::size_t i = 0; i < n; ++i) std::swap(w[i][x], w[i][y]);
    std::swap(winv[x], winv[y]);
  };
  auto row_addmul = [&](std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < n; ++j) a[dst][j] += q * a[src][j];
  };

  std::size_t t = 0;
  while (t < std::min(k, n)) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto move_min_to_pivot = [&]() -> bool {
      bool found = false;
      std::size_t bi = t, bj = t;
      Integer best;
      for (std::size_t i = t; i < k; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (a[i][j] == 0) continue;
          Integer v = abs(a[i][j]);
          if (!found || v < best) {
            found = true;
            best = v;
            bi = i;
            bj = j;
          }
        }
      }
      if (!found) return false;
      std::swap(a[t], a[bi]);
      col_swap(t, bj);
      return true;
    };
    if (!move_min_to_pivot()) break;

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < k; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / a[t][t];
        row_addmul(i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / a[t][t];
        col_addmul(j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        move_min_to_pivot();
        continue;
      }
      // Enforce the divisibility chain d_t | (rest of the block).
      bool divides = true;
      for (std::size_t i = t + 1; i < k && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            row_addmul(t, i, Integer(1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (std::size_t j = 0; j < n; ++j) a[t][j] = -a[t][j];
    }
    ++t;
  }

  SmithForm out;
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(a[i][i]);
  for (std::size_t i = 0; i < n; ++i) {
    out.column.emplace_back(w[i]);
    out.column_inverse.emplace_back(winv[i]);
  }
  return out;
}

// ---------------------------------------------------------------- sublattices

SublatticeBasis::SublatticeBasis(std::span<const LatticeVector> generators,
                                 std::size_t ambient_rank)
    : ambient_rank_(ambient_rank) {
  SmithForm snf = smith_normal_form(generators, ambient_rank);
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    if (i < snf.rank) {
      basis_.push_back(snf.column_inverse[i]);
    } else {
      complement_.push_back(snf.column_inverse[i]);
    }
  }
  to_coordinates_ = std::move(snf.column);
}

bool SublatticeBasis::contains(const LatticeVector& v) const {
  if (v.rank() != ambient_rank_) return false;
  for (std::size_t j = rank(); j < ambient_rank_; ++j) {
    Integer y = 0;
    for (std::size_t i = 0; i < ambient_rank_; ++i) y += v[i] * to_coordinates_[i][j];
    if (y != 0) return false;
  }
  return true;
}

LatticeVector SublatticeBasis::coordinates(const LatticeVector& v) const {
  if (v.rank() != ambient_rank_) throw InputError("coordinates: rank mismatch");
  std::vector<Integer> y(ambient_rank_, Integer(0));
  for (std::size_t j = 0; j < ambient_rank_; ++j) {
    for (std::size_t i = 0; i < ambient_rank_; ++i) y[j] += v[i] * to_coordinates_[i][j];
  }
  for (std::size_t j = rank(); j < ambient_rank_; ++j) {
    if (y[j] != 0) throw InputError("vector " + v.to_string() + " is not in the sublattice span");
  }
  y.resize(rank());
  return LatticeVector(std::move(y));
}

LatticeVector SublatticeBasis::embed(const LatticeVector& coords) const {
  if (coords.rank() != rank()) throw InputError("embed: coordinate rank mismatch");
  LatticeVector out = LatticeVector::zero(ambient_rank_);
  for (std::size_t i = 0; i < rank(); ++i) out = out + basis_[i].scaled(coords[i]);
  return out;
}

std::vector<LatticeVector> saturate(std::span<const LatticeVector> vectors) {
  if (vectors.empty()) return {};
  SublatticeBasis b(vectors, vectors.front().rank());
  return b.basis();
}

// ---------------------------------------------------------------- polytopes

RationalPolytope::RationalPolytope(std::size_t ambient_rank, std::vector<HalfSpace> inequalities)
    : ambient_rank_(ambient_rank), inequalities_(std::move(inequalities)) {
  if (ambient_rank_ == 0) throw InputError("polytope ambient rank must be positive");
  for (const auto& h : inequalities_) {
    if (h.normal.rank() != ambient_rank_) throw InputError("polytope: normal rank mismatch");
  }
}

bool RationalPolytope::contains(const LatticeVector& x) const {
  return std::all_of(inequalities_.begin(), inequalities_.end(),
                     [&](const HalfSpace& h) { return pairing(h.normal, x) >= h.offset; });
}

std::vector<LatticeVector> enumerate_lattice_points(const RationalPolytope& p) {
  const std::size_t n = p.ambient_rank();
  const auto& ineq = p.inequalities();

  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int dir : {1, -1}) {
      LatticeVector obj = LatticeVector::unit(n, i).scaled(Integer(dir));
      LpResult r = lp_minimize(obj, ineq);
      if (r.status == LpStatus::kInfeasible) return {};
      if (r.status == LpStatus::kUnbounded) {
        throw UnboundedError("polytope is unbounded along coordinate " + std::to_string(i) +
                             "; tighten the bounds");
      }
      if (dir == 1) {
        lo[i] = ceil(r.value);
      } else {
        hi[i] = floor(-r.value);
      }
    }
    if (lo[i] > hi[i]) return {};
  }

  // tail_max[h][k] = max over the box of Σ_{j>=k} normal_j x_j.
  std::vector<std::vector<Integer>> tail_max(ineq.size(), std::vector<Integer>(n + 1, Integer(0)));
  for (std::size_t h = 0; h < ineq.size(); ++h) {
    for (std::size_t k = n; k-- > 0;) {
      const Integer& c = ineq[h].normal[k];
      Integer best = c >= 0 ? Integer(c * hi[k]) : Integer(c * lo[k]);
      tail_max[h][k] = tail_max[h][k + 1] + best;
    }
  }

  std::vector<LatticeVector> out;
  std::vector<Integer> x(n);
  std::vector<Integer> prefix(ineq.size(), Integer(0));

  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.emplace_back(x);
      return;
    }
    Integer a = lo[k], b = hi[k];
    for (std::size_t h = 0; h < ineq.size(); ++h) {
      // normal_k x_k >= offset - prefix - tail_max(k+1)
      const Integer& c = ineq[h].normal[k];
      Integer need = ineq[h].offset - prefix[h] - tail_max[h][k + 1];
      if (c == 0) {
        if (need > 0) return;
      } else if (c > 0) {
        a = std::max(a, ceil(Rational(need, c)));
      } else {
        b = std::min(b, floor(Rational(need, c)));
      }
    }
    for (Integer v = a; v <= b; ++v) {
      x[k] = v;
      for (std::size_t h = 0; h < ineq.size(); ++h) prefix[h] += ineq[h].normal[k] * v;
      self(self, k + 1);
      for (std::size_t h = 0; h < ineq.size(); ++h) prefix[h] -= ineq[h].normal[k] * v;
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace mld
