#include "mld/linear_program.hpp"

#include <cstddef>
#include <optional>

#include "mld/errors.hpp"

namespace mld {

namespace {

// Dense tableau for: minimize c.x subject to A x = b, x >= 0, b >= 0.
// Row i of `rows` holds A_i followed by b_i; `basis[i]` is the basic column.
struct Tableau {
  std::size_t cols = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    auto& pr = rows[r];
    const Rational inv = 1 / pr[c];
    for (auto& x : pr) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (pr[j] != 0) rows[i][j] -= f * pr[j];
      }
    }
    basis[r] = c;
  }

  // Reduced costs of `cost` (length cols) with respect to the current basis.
  std::vector<Rational> reduced(const std::vector<Rational>& cost) const {
    std::vector<Rational> d(cost);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) d[j] -= cb * rows[i][j];
    }
    return d;
  }

  // Bland's rule. Columns with allowed[j] == false never enter.
  // Returns false if the objective is unbounded below.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      const std::vector<Rational> d = reduced(cost);
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols; ++j) {
        if (allowed[j] && d[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational& a = rows[i][*enter];
        if (a <= 0) continue;
        Rational ratio = rows[i][cols] / a;
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LpResult lp_minimize(std::span<const Rational> objective,
                     std::span<const std::vector<Rational>> normals,
                     std::span<const Rational> offsets) {
  const std::size_t n = objective.size();
  const std::size_t m = normals.size();
  if (offsets.size() != m) throw InputError("lp_minimize: normals/offsets size mismatch");
  for (const auto& row : normals) {
    if (row.size() != n) throw InputError("lp_minimize: constraint rank mismatch");
  }

  LpResult result;
  if (m == 0) {
    for (const auto& c : objective) {
      if (c != 0) {
        result.status = LpStatus::kUnbounded;
        return result;
      }
    }
    result.status = LpStatus::kOptimal;
    result.value = 0;
    result.point.assign(n, Rational(0));
    return result;
  }

  // Columns: x+ (n), x- (n), surplus (m), artificial (m).
  const std::size_t art0 = 2 * n + m;
  Tableau t;
  t.cols = art0 + m;
  t.rows.assign(m, std::vector<Rational>(t.cols + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto& r = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = normals[i][j];
      r[n + j] = -normals[i][j];
    }
    r[2 * n + i] = -1;
    r[t.cols] = offsets[i];
    if (offsets[i] < 0) {
      for (std::size_t j = 0; j < art0; ++j) r[j] = -r[j];
      r[t.cols] = -r[t.cols];
    }
    r[art0 + i] = 1;
    t.basis[i] = art0 + i;
  }

  std::vector<bool> allowed(t.cols, true);
  std::vector<Rational> phase1(t.cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = 1;
  t.optimize(phase1, allowed);

  Rational infeas = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] >= art0) infeas += t.rows[i][t.cols];
  }
  if (infeas > 0) {
    result.status = LpStatus::kInfeasible;
    return result;
  }

  // Drive zero-valued artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < art0) continue;
    for (std::size_t j = 0; j < art0; ++j) {
      if (t.rows[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }
  for (std::size_t j = art0; j < t.cols; ++j) allowed[j] = false;

  std::vector<Rational> phase2(t.cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = objective[j];
    phase2[n + j] = -objective[j];
  }
  if (!t.optimize(phase2, allowed)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  std::vector<Rational> z(t.cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) z[t.basis[i]] = t.rows[i][t.cols];
  result.status = LpStatus::kOptimal;
  result.point.resize(n);
  result.value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    result.point[j] = z[j] - z[n + j];
    result.value += objective[j] * result.point[j];
  }
  return result;
}

LpResult lp_minimize(const LatticeVector& objective, std::span<const HalfSpace> constraints) {
  const std::size_t n = objective.rank();
  std::vector<Rational> c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = Rational(objective[j]);
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  a.reserve(constraints.size());
  b.reserve(constraints.size());
  for (const auto& h : constraints) {
    if (h.normal.rank() != n) throw InputError("lp_minimize: half-space rank mismatch");
    std::vector<Rational> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = Rational(h.normal[j]);
    a.push_back(std::move(row));
    b.emplace_back(h.offset);
  }
  return lp_minimize(c, a, b);
}

bool lp_feasible(std::size_t ambient_rank, std::span<const HalfSpace> constraints) {
  return lp_minimize(LatticeVector::zero(ambient_rank), constraints).status != LpStatus::kInfeasible;
}

}  // namespace mld
