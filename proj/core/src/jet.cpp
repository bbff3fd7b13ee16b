#include "mld/jet.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mld/errors.hpp"

namespace mld {

namespace {

using Monomial = std::vector<JetFactor>;
using Series = std::vector<std::map<Monomial, Integer>>;  // index = t-degree

Monomial times(const Monomial& m, std::size_t var, std::int64_t order) {
  Monomial out = m;
  auto it = std::find_if(out.begin(), out.end(),
                         [&](const JetFactor& f) { return f.var == var && f.order == order; });
  if (it != out.end()) {
    ++it->exponent;
  } else {
    out.push_back({var, order, 1});
    std::sort(out.begin(), out.end());
  }
  return out;
}

// Coefficients of t^s, s <= smax, in x^b after x_j -> Σ_{u>=α_j} x_j^{(u)} t^u.
Series expand_monomial(const LatticeVector& b, const AlphaTuple& alpha, std::int64_t smax) {
  Series series(static_cast<std::size_t>(smax) + 1);
  series[0][{}] = 1;
  for (std::size_t j = 0; j < b.rank(); ++j) {
    const std::int64_t aj = to_int64(alpha[j]);
    for (long e = 0; e < b[j].get_si(); ++e) {
      Series next(series.size());
      for (std::int64_t d = 0; d <= smax; ++d) {
        for (const auto& [mono, c] : series[d]) {
          for (std::int64_t u = aj; d + u <= smax; ++u) {
            next[d + u][times(mono, j, u)] += c;
          }
        }
      }
      series = std::move(next);
    }
  }
  return series;
}

// All G_s for n0 <= s <= smax with symbolic a_i (coefficient = multinomial).
std::map<std::int64_t, JetPolynomial> expand_generic(const Support& s, const AlphaTuple& alpha,
                                                     std::int64_t smax, std::int64_t n0) {
  std::map<std::int64_t, JetPolynomial> g;
  for (std::int64_t k = n0; k <= smax; ++k) g[k];
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Series series = expand_monomial(s.exponents[i], alpha, smax);
    for (std::int64_t k = n0; k <= smax; ++k) {
      for (const auto& [mono, c] : series[k]) {
        JetTerm t{c, i, mono};
        if (t.weight() != k) {
          throw std::logic_error("jet expansion produced a monomial of weight " +
                                 std::to_string(t.weight()) + " in G_" + std::to_string(k));
        }
        g[k].terms.push_back(std::move(t));
      }
    }
  }
  return g;
}

void check_expansion_inputs(const Support& s, const AlphaTuple& alpha, std::int64_t m) {
  if (alpha.size() != s.num_vars) throw InputError("alpha length does not match the support");
  if (m < to_int64(alpha.max())) {
    throw InputError("truncation order m=" + std::to_string(m) + " is below max alpha " +
                     alpha.max().get_str());
  }
}

// Values of x_j^{(u)} over F_p, indexed [j][u].
using Assignment = std::vector<std::vector<std::uint64_t>>;

struct CompiledTerm {
  std::uint64_t coefficient;  // multinomial mod p
  std::size_t source;
  std::vector<JetFactor> factors;
};

std::vector<CompiledTerm> compile(const PrimeField& f, const JetPolynomial& p) {
  std::vector<CompiledTerm> out;
  for (const auto& t : p.terms) out.push_back({f.reduce(t.coefficient), t.source, t.factors});
  return out;
}

std::uint64_t evaluate(const PrimeField& f, const std::vector<CompiledTerm>& p,
                       const std::vector<std::uint64_t>& coeffs, const Assignment& x) {
  std::uint64_t total = 0;
  for (const auto& t : p) {
    std::uint64_t v = f.mul(t.coefficient, coeffs[t.source]);
    for (const auto& fac : t.factors) v = f.mul(v, f.pow(x[fac.var][fac.order], fac.exponent));
    total = f.add(total, v);
  }
  return total;
}

std::uint64_t evaluate_generic(const PrimeField& f, const GenericPolynomial& p,
                               const std::vector<std::uint64_t>& coeffs,
                               const std::vector<std::uint64_t>& point) {
  std::uint64_t total = 0;
  for (const auto& t : p.terms) {
    std::uint64_t v = f.mul(f.reduce(t.multiplier), coeffs[t.coefficient]);
    for (std::size_t j = 0; j < t.exponents.size(); ++j) v = f.mul(v, f.pow(point[j], t.exponents[j].get_ui()));
    total = f.add(total, v);
  }
  return total;
}

// ∂p/∂x_j at a point.
std::uint64_t partial_generic(const PrimeField& f, const GenericPolynomial& p, std::size_t j,
                              const std::vector<std::uint64_t>& coeffs,
                              const std::vector<std::uint64_t>& point) {
  std::uint64_t total = 0;
  for (const auto& t : p.terms) {
    const std::uint64_t e = t.exponents[j].get_ui();
    if (e == 0) continue;
    std::uint64_t v = f.mul(f.mul(f.reduce(t.multiplier), coeffs[t.coefficient]), e % f.modulus());
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      const std::uint64_t ei = t.exponents[i].get_ui() - (i == j ? 1 : 0);
      v = f.mul(v, f.pow(point[i], ei));
    }
    total = f.add(total, v);
  }
  return total;
}

// The variable solved for: smallest positive top degree, ties to the highest index.
std::optional<std::size_t> solve_variable(const GenericPolynomial& p) {
  std::optional<std::size_t> best;
  Integer best_deg;
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    Integer deg = 0;
    for (const auto& t : p.terms) deg = std::max(deg, t.exponents[j]);
    if (deg <= 0) continue;
    if (!best || deg <= best_deg) {
      best = j;
      best_deg = deg;
    }
  }
  return best;
}

// p restricted to the line through `point` along variable b, as a polynomial in x_b.
UniPoly restrict_to(const PrimeField& f, const GenericPolynomial& p, std::size_t b,
                    const std::vector<std::uint64_t>& coeffs, const std::vector<std::uint64_t>& point) {
  UniPoly u;
  for (const auto& t : p.terms) {
    const std::size_t e = t.exponents[b].get_ui();
    if (u.size() <= e) u.resize(e + 1, 0);
    std::uint64_t v = f.mul(f.reduce(t.multiplier), coeffs[t.coefficient]);
    for (std::size_t j = 0; j < t.exponents.size(); ++j) {
      if (j != b) v = f.mul(v, f.pow(point[j], t.exponents[j].get_ui()));
    }
    u[e] = f.add(u[e], v);
  }
  while (!u.empty() && u.back() == 0) u.pop_back();
  return u;
}

// Nonzero values of x_b with p = 0, other coordinates fixed. nullopt means p
// vanishes identically on the line.
std::optional<std::vector<std::uint64_t>> nonzero_roots(const PrimeField& f, const GenericPolynomial& p,
                                                        std::size_t b,
                                                        const std::vector<std::uint64_t>& coeffs,
                                                        const std::vector<std::uint64_t>& point,
                                                        std::mt19937_64& rng) {
  const UniPoly u = restrict_to(f, p, b, coeffs, point);
  if (u.empty()) return std::nullopt;
  std::vector<std::uint64_t> r = roots(f, u, rng);
  r.erase(std::remove(r.begin(), r.end(), 0), r.end());
  return r;
}

}  // namespace

std::int64_t JetTerm::weight() const {
  std::int64_t w = 0;
  for (const auto& f : factors) w += f.order * static_cast<std::int64_t>(f.exponent);
  return w;
}

std::string JetPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (i) os << " + ";
    os << t.coefficient;
    for (const auto& f : t.factors) {
      os << "*x" << f.var + 1 << "^(" << f.order << ")";
      if (f.exponent != 1) os << '^' << f.exponent;
    }
  }
  return os.str();
}

TruncatedExpansion expand(const Support& s, const std::vector<Integer>& coefficients,
                          const AlphaTuple& alpha, std::int64_t m, std::optional<std::uint64_t> prime,
                          std::optional<std::int64_t> max_weight) {
  check_expansion_inputs(s, alpha, m);
  if (!coefficients.empty() && coefficients.size() != s.size()) {
    throw InputError("expected " + std::to_string(s.size()) + " coefficients");
  }
  std::optional<PrimeField> field;
  if (prime) field.emplace(*prime);

  TruncatedExpansion out;
  out.alpha = alpha;
  out.m = m;
  out.prime = prime;
  out.coefficients = coefficients.empty() ? std::vector<Integer>(s.size(), Integer(1)) : coefficients;
  for (const auto& c : out.coefficients) {
    if (c == 0 || (field && field->reduce(c) == 0)) throw InputError("coefficients must be nonzero");
  }
  const std::int64_t n0 = to_int64(mu_and_n0(s, alpha).n0);
  const std::int64_t smax = max_weight.value_or(m);
  out.g = expand_generic(s, alpha, smax, n0);
  for (auto& [k, poly] : out.g) {
    for (auto& t : poly.terms) {
      t.coefficient *= out.coefficients[t.source];
      if (field) t.coefficient = static_cast<unsigned long>(field->reduce(t.coefficient));
    }
    std::erase_if(poly.terms, [](const JetTerm& t) { return t.coefficient == 0; });
  }
  return out;
}

StaircaseResult staircase_verify(const Support& s, const AlphaTuple& alpha, std::int64_t m,
                                 std::uint64_t prime, std::size_t trials, std::uint64_t seed) {
  check_expansion_inputs(s, alpha, m);
  const PrimeField f(prime);
  StaircaseResult res;
  res.prime = prime;
  const std::size_t k = s.num_vars;
  const std::int64_t n = static_cast<std::int64_t>(s.dimension());
  for (std::size_t j = 0; j < k; ++j) res.window += m - to_int64(alpha[j]) + 1;
  if (!is_feasible(s, alpha)) {
    res.empty = true;
    return res;
  }

  const EqualityCertificate cert = equality_certificate(s, alpha);
  const std::int64_t n0 = to_int64(cert.n0);
  const std::int64_t n0p = to_int64(cert.n0_prime);
  const std::size_t j0 = cert.j0;
  const std::int64_t top = n0p + m - to_int64(alpha[j0]);
  if (m < to_int64(alpha.max()) + (n0p - n0) || m <= n0p - to_int64(alpha[j0])) {
    throw InputError("truncation order m=" + std::to_string(m) + " is too small for this alpha");
  }
  std::int64_t alpha_excess = 0;
  for (std::size_t j = 0; j < k; ++j) alpha_excess += to_int64(alpha[j]) - 1;
  res.formula_dim = m * n - alpha_excess - 1 + n0 - to_int64(cert.mu);
  res.equations_solved = top - n0 + 1;
  res.free_parameter_count = res.window - res.equations_solved;

  const auto g = expand_generic(s, alpha, top, n0);
  std::map<std::int64_t, std::vector<CompiledTerm>> compiled;
  for (const auto& [kk, poly] : g) {
    for (const auto& t : poly.terms) {
      for (const auto& fac : t.factors) {
        if (fac.order > m) throw std::logic_error("staircase equation uses a variable above order m");
      }
    }
    compiled[kk] = compile(f, poly);
  }

  const auto base = solve_variable(cert.p0);
  if (!base) throw std::logic_error("P0 has no variable to solve for");
  std::mt19937_64 rng(seed);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    ++res.trials;
    std::vector<std::uint64_t> coeffs(s.size());
    for (auto& c : coeffs) c = f.random_nonzero(rng);

    // Base point on the torus with P0 = 0.
    std::vector<std::uint64_t> point(k);
    bool have_base = false;
    for (int attempt = 0; attempt < 32 && !have_base; ++attempt) {
      for (std::size_t j = 0; j < k; ++j) point[j] = f.random_nonzero(rng);
      const auto r = nonzero_roots(f, cert.p0, *base, coeffs, point, rng);
      if (!r) {
        have_base = true;
      } else if (!r->empty()) {
        point[*base] = (*r)[std::uniform_int_distribution<std::size_t>(0, r->size() - 1)(rng)];
        have_base = true;
      }
    }
    if (!have_base) continue;
    if (evaluate_generic(f, cert.t0, coeffs, point) == 0) continue;

    std::optional<std::size_t> jp;
    for (std::size_t j = 0; j < k && !jp; ++j) {
      if (partial_generic(f, cert.p0, j, coeffs, point) != 0) jp = j;
    }
    if (!jp && n0p > n0) continue;

    Assignment x(k, std::vector<std::uint64_t>(static_cast<std::size_t>(m) + 1, 0));
    std::vector<std::vector<bool>> is_pivot(k, std::vector<bool>(static_cast<std::size_t>(m) + 1, false));
    std::map<std::int64_t, std::pair<std::size_t, std::int64_t>> pivot;
    for (std::int64_t kk = n0 + 1; kk <= top; ++kk) {
      if (kk <= n0p) {
        pivot[kk] = {*jp, to_int64(alpha[*jp]) + kk - n0};
      } else {
        pivot[kk] = {j0, to_int64(alpha[j0]) + kk - n0p};
      }
      is_pivot[pivot[kk].first][pivot[kk].second] = true;
    }
    for (std::size_t j = 0; j < k; ++j) {
      const std::int64_t aj = to_int64(alpha[j]);
      x[j][aj] = point[j];
      for (std::int64_t u = aj + 1; u <= m; ++u) {
        if (!is_pivot[j][u]) x[j][u] = f.random(rng);
      }
    }

    bool ok = true;
    for (std::int64_t kk = n0 + 1; kk <= top && ok; ++kk) {
      const auto [var, order] = pivot[kk];
      x[var][order] = 0;
      const std::uint64_t r0 = evaluate(f, compiled[kk], coeffs, x);
      x[var][order] = 1;
      const std::uint64_t c = f.sub(evaluate(f, compiled[kk], coeffs, x), r0);
      if (c == 0) {
        ok = false;
        break;
      }
      x[var][order] = f.mul(f.neg(r0), f.inv(c));
    }
    for (std::int64_t kk = n0; kk <= top && ok; ++kk) ok = evaluate(f, compiled[kk], coeffs, x) == 0;
    if (ok) ++res.successes;
  }
  if (res.successes > 0) res.estimated_dim = res.window - res.equations_solved;
  return res;
}

TorusSample torus_point_sample(const GenericPolynomial& p0, const GenericPolynomial& t0,
                               std::size_t num_coefficients, std::uint64_t prime, std::size_t trials,
                               std::uint64_t seed, const std::vector<std::uint64_t>& fixed_coefficients) {
  const PrimeField f(prime);
  TorusSample out;
  out.prime = prime;
  if (p0.terms.size() < 2) return out;
  if (!fixed_coefficients.empty() && fixed_coefficients.size() != num_coefficients) {
    throw InputError("expected " + std::to_string(num_coefficients) + " fixed coefficients");
  }
  for (const auto& t : p0.terms) {
    if (t.coefficient >= num_coefficients) throw InputError("coefficient index out of range");
  }
  for (const auto& t : t0.terms) {
    if (t.coefficient >= num_coefficients) throw InputError("coefficient index out of range");
  }
  const auto b = solve_variable(p0);
  if (!b) return out;
  std::mt19937_64 rng(seed);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    ++out.trials;
    std::vector<std::uint64_t> coeffs(num_coefficients);
    for (std::size_t i = 0; i < num_coefficients; ++i) {
      coeffs[i] = fixed_coefficients.empty() ? f.random_nonzero(rng) : f.reduce(fixed_coefficients[i]);
    }
    std::vector<std::uint64_t> point(p0.num_vars);
    for (auto& v : point) v = f.random_nonzero(rng);
    const auto r = nonzero_roots(f, p0, *b, coeffs, point, rng);
    if (r) {
      if (r->empty()) continue;
      point[*b] = (*r)[std::uniform_int_distribution<std::size_t>(0, r->size() - 1)(rng)];
    }
    if (evaluate_generic(f, t0, coeffs, point) == 0) continue;
    ++out.successes;
    if (!out.found) {
      out.found = true;
      out.coefficients = coeffs;
      out.point = point;
    }
  }
  return out;
}

}  // namespace mld
