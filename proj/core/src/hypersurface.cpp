#include "mld/hypersurface.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mld/errors.hpp"
#include "mld/jet.hpp"

namespace mld {

namespace {

std::string var_name(std::size_t j) { return "x" + std::to_string(j + 1); }

void check_alpha(const Support& s, const AlphaTuple& alpha) {
  if (alpha.size() != s.num_vars) {
    throw InputError("alpha has " + std::to_string(alpha.size()) + " entries, support has " +
                     std::to_string(s.num_vars) + " variables");
  }
}

}  // namespace

// ---------------------------------------------------------------- Support

Support::Support(std::size_t n, std::vector<LatticeVector> e)
    : num_vars(n), exponents(std::move(e)), original_num_vars(n) {
  if (num_vars == 0) throw InputError("support needs at least one variable");
  if (exponents.empty()) throw InputError("support needs at least one monomial");
  for (const auto& v : exponents) {
    if (v.rank() != num_vars) {
      throw InputError("exponent " + v.to_string() + " does not have " + std::to_string(num_vars) +
                       " entries");
    }
    for (std::size_t j = 0; j < num_vars; ++j) {
      if (v[j] < 0) throw InputError("negative exponent in " + v.to_string());
    }
  }
}

Integer Support::max_exponent() const {
  Integer d = 0;
  for (const auto& v : exponents) {
    for (const auto& x : v.entries()) d = std::max(d, x);
  }
  return d;
}

std::size_t affine_dimension(const Support& s) {
  std::vector<LatticeVector> diffs;
  for (std::size_t i = 1; i < s.exponents.size(); ++i) diffs.push_back(s.exponents[i] - s.exponents[0]);
  return rank_of(diffs);
}

SupportValidation validate_support(const std::vector<std::vector<Integer>>& raw) {
  SupportValidation out;
  auto fail = [&](std::string clause, std::string detail) {
    out.violations.push_back({std::move(clause), std::move(detail)});
  };
  if (raw.empty()) {
    fail("shape", "support is empty");
    return out;
  }
  const std::size_t n = raw.front().size();
  if (n == 0) {
    fail("shape", "exponent vectors have no entries");
    return out;
  }
  for (const auto& row : raw) {
    if (row.size() != n) {
      fail("shape", "exponent vectors have different lengths");
      return out;
    }
    for (const auto& x : row) {
      if (x < 0) {
        fail("shape", "negative exponent " + x.get_str());
        return out;
      }
    }
  }
  std::set<std::vector<Integer>> seen;
  for (const auto& row : raw) {
    if (!seen.insert(row).second) fail("shape", "duplicate exponent " + LatticeVector(row).to_string());
  }
  for (const auto& row : raw) {
    if (std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; })) {
      fail("origin", "the origin is in the support (f has a constant term)");
    }
  }

  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < n; ++j) {
    bool used = false;
    for (const auto& row : raw) used = used || row[j] != 0;
    if (used) {
      kept.push_back(j);
    } else {
      out.dropped_variables.push_back(j);
    }
  }
  if (kept.empty()) {
    fail("shape", "no variable appears in the support");
    return out;
  }
  for (std::size_t j : kept) {
    bool plane = false;
    for (const auto& row : raw) plane = plane || row[j] == 0;
    if (!plane) {
      fail("coordinate-plane",
           "no monomial lies in the plane " + var_name(j) + "=0 (f is divisible by " + var_name(j) + ")");
    }
  }

  std::vector<LatticeVector> reduced;
  for (const auto& row : raw) {
    std::vector<Integer> r;
    for (std::size_t j : kept) r.push_back(row[j]);
    reduced.emplace_back(std::move(r));
  }
  if (reduced.size() < 2) {
    fail("dimension", "a single monomial never defines an integral hypersurface through the origin");
  } else {
    std::vector<LatticeVector> diffs;
    for (std::size_t i = 1; i < reduced.size(); ++i) diffs.push_back(reduced[i] - reduced[0]);
    out.affine_dimension = rank_of(diffs);
    if (out.affine_dimension == 1) {
      if (reduced.size() > 2) {
        fail("dimension", "dim(A)=1 and conv(A) contains " + std::to_string(reduced.size()) +
                              " or more lattice points");
      } else {
        const Integer g = diffs.front().content();
        if (g != 1) {
          fail("dimension", "dim(A)=1 and conv(A) contains " + Integer(g + 1).get_str() +
                                " lattice points (difference vector has content " + g.get_str() + ")");
        }
      }
    }
  }
  if (!out.violations.empty()) return out;

  Support s(kept.size(), std::move(reduced));
  s.original_num_vars = n;
  s.dropped_variables = out.dropped_variables;
  out.support = std::move(s);
  return out;
}

Support require_integral(const std::vector<std::vector<Integer>>& raw) {
  SupportValidation v = validate_support(raw);
  if (!v.ok()) {
    std::string msg = "support is not integral:";
    for (const auto& x : v.violations) msg += " [" + x.clause + "] " + x.detail + ";";
    msg.pop_back();
    throw InputError(msg);
  }
  return *v.support;
}

// ---------------------------------------------------------------- AlphaTuple

AlphaTuple::AlphaTuple(std::vector<Integer> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw InputError("alpha tuple is empty");
  for (const auto& a : orders_) {
    if (a < 1) throw InputError("alpha entries must be >= 1, got " + a.get_str());
  }
}

AlphaTuple::AlphaTuple(std::initializer_list<long> orders) {
  for (long a : orders) orders_.emplace_back(a);
  *this = AlphaTuple(std::move(orders_));
}

Integer AlphaTuple::max() const { return *std::max_element(orders_.begin(), orders_.end()); }

Integer AlphaTuple::sum() const {
  Integer s = 0;
  for (const auto& a : orders_) s += a;
  return s;
}

std::string AlphaTuple::to_string() const { return LatticeVector(orders_).to_string(); }

Integer dot(const AlphaTuple& alpha, const LatticeVector& e) {
  if (alpha.size() != e.rank()) throw InputError("alpha/exponent length mismatch");
  Integer s = 0;
  for (std::size_t j = 0; j < e.rank(); ++j) s += alpha[j] * e[j];
  return s;
}

// ---------------------------------------------------------------- objective

bool is_feasible(const Support& s, const AlphaTuple& alpha) {
  check_alpha(s, alpha);
  std::optional<Integer> best;
  std::size_t count = 0;
  for (const auto& e : s.exponents) {
    const Integer v = dot(alpha, e);
    if (!best || v < *best) {
      best = v;
      count = 1;
    } else if (v == *best) {
      ++count;
    }
  }
  return count >= 2;
}

MuN0 mu_and_n0(const Support& s, const AlphaTuple& alpha) {
  check_alpha(s, alpha);
  MuN0 r;
  std::vector<Integer> prod;
  for (const auto& e : s.exponents) prod.push_back(dot(alpha, e));
  r.n0 = *std::min_element(prod.begin(), prod.end());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    if (prod[i] == r.n0) r.n0_terms.push_back(i);
  }
  bool first = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.num_vars; ++j) {
      if (s.exponents[i][j] <= 0) continue;
      const Integer v = prod[i] - alpha[j];
      if (first || v < r.mu) {
        r.mu = v;
        r.mu_pairs.clear();
        first = false;
      }
      if (v == r.mu) r.mu_pairs.emplace_back(i, j);
    }
  }
  return r;
}

Integer objective(const Support& s, const AlphaTuple& alpha) {
  if (!is_feasible(s, alpha)) throw InputError("alpha " + alpha.to_string() + " is not feasible");
  const MuN0 r = mu_and_n0(s, alpha);
  return alpha.sum() - static_cast<long>(alpha.size()) + 1 - r.n0 + r.mu;
}

ObjectiveMinimum minimize_objective(const Support& s, const SearchOptions& options) {
  const std::size_t k = s.num_vars;
  const Integer n = static_cast<long>(s.dimension());
  const Integer d = s.max_exponent();
  ObjectiveMinimum out;

  auto count_visit = [&]() {
    if (++out.visited > options.max_visits) {
      throw LimitExceeded("objective search visited more than " + std::to_string(options.max_visits) +
                          " tuples");
    }
  };

  // Seed: first feasible tuple on the shells max(α) = 1, 2, ...
  std::vector<Integer> alpha(k);
  bool found = false;
  for (Integer r = 1; !found; ++r) {
    auto shell = [&](auto&& self, std::size_t pos, bool hit) -> void {
      if (found) return;
      if (pos == k) {
        if (!hit) return;
        count_visit();
        AlphaTuple a(alpha);
        if (is_feasible(s, a)) {
          out.seed = a;
          found = true;
        }
        return;
      }
      for (Integer v = 1; v <= r && !found; ++v) {
        alpha[pos] = v;
        self(self, pos + 1, hit || v == r);
      }
    };
    shell(shell, 0, false);
  }
  out.seed_value = objective(s, out.seed);
  out.value = out.seed_value;
  out.witness = out.seed;

  auto cap_for = [&](const Integer& b) -> Integer {
    if (options.box_bound) return *options.box_bound;
    return b + d * (b + n);
  };
  out.box_bound = cap_for(out.seed_value);
  out.heuristic = options.box_bound.has_value();

  // Obj >= Σα - max α - n, so Σα - max α <= B + n for every candidate.
  auto dfs = [&](auto&& self, std::size_t pos, const Integer& sum, const Integer& mx) -> void {
    if (pos == k) {
      count_visit();
      AlphaTuple a(alpha);
      if (!is_feasible(s, a)) return;
      const Integer v = objective(s, a);
      if (v < out.value) out.minimizers.clear();
      if (v <= out.value && out.minimizers.size() < kMaxMinimizers) out.minimizers.push_back(a);
      if (v < out.value || (v == out.value && a < out.witness)) {
        out.value = v;
        out.witness = a;
      }
      return;
    }
    const Integer cap = cap_for(out.value);
    for (Integer v = 1; v <= cap; ++v) {
      const Integer nsum = sum + v;
      const Integer nmx = std::max(mx, v);
      const Integer lower = nsum - nmx + static_cast<long>(k - pos - 1);
      if (lower > out.value + n) {
        if (v >= mx) break;  // raising v only grows sum - max from here on
        continue;
      }
      alpha[pos] = v;
      self(self, pos + 1, nsum, nmx);
    }
  };
  dfs(dfs, 0, Integer(0), Integer(0));
  if (out.minimizers.empty()) out.minimizers.push_back(out.witness);
  std::sort(out.minimizers.begin(), out.minimizers.end());
  return out;
}

// ---------------------------------------------------------------- certificate

std::string GenericPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    if (t) os << " + ";
    if (term.multiplier != 1) os << term.multiplier << '*';
    os << 'a' << term.coefficient + 1;
    for (std::size_t j = 0; j < term.exponents.size(); ++j) {
      if (term.exponents[j] == 0) continue;
      os << '*' << (j < names.size() ? names[j] : var_name(j));
      if (term.exponents[j] != 1) os << '^' << term.exponents[j];
    }
  }
  return os.str();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kCertified:
      return "CERTIFIED";
    case Verdict::kCertifiedProbabilistic:
      return "CERTIFIED_PROBABILISTIC";
    case Verdict::kUndecided:
      return "UNDECIDED";
  }
  return "UNDECIDED";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::kExact:
      return "EXACT";
    case Status::kLowerBound:
      return "LOWER_BOUND";
    case Status::kHeuristic:
      return "HEURISTIC";
  }
  return "LOWER_BOUND";
}

EqualityCertificate equality_certificate(const Support& s, const AlphaTuple& alpha,
                                         const SamplerOptions& sampler) {
  if (!is_feasible(s, alpha)) throw InputError("alpha " + alpha.to_string() + " is not feasible");
  const MuN0 r = mu_and_n0(s, alpha);
  EqualityCertificate c;
  c.n0 = r.n0;
  c.mu = r.mu;
  c.p0.num_vars = c.p1.num_vars = c.t0.num_vars = s.num_vars;
  for (std::size_t i : r.n0_terms) c.p0.terms.push_back({i, Integer(1), s.exponents[i].entries()});

  c.j0 = r.mu_pairs.front().second;
  for (const auto& [i, j] : r.mu_pairs) c.j0 = std::min(c.j0, j);

  bool first = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.exponents[i][c.j0] <= 0) continue;
    const Integer v = dot(alpha, s.exponents[i]);
    if (first || v < c.n0_prime) {
      c.n0_prime = v;
      c.sigma.clear();
      first = false;
    }
    if (v == c.n0_prime) c.sigma.push_back(i);
  }
  for (std::size_t i : c.sigma) {
    c.p1.terms.push_back({i, Integer(1), s.exponents[i].entries()});
    std::vector<Integer> e = s.exponents[i].entries();
    const Integer mult = e[c.j0];
    e[c.j0] -= 1;
    c.t0.terms.push_back({i, mult, std::move(e)});
  }

  if (c.p0.terms.size() >= 2 && c.t0.is_monomial()) {
    c.verdict = Verdict::kCertified;
    c.reason = "P0 has " + std::to_string(c.p0.terms.size()) +
               " monomials, so it vanishes somewhere on the torus, and T0 is a monomial";
    return c;
  }
  c.reason = c.p0.terms.size() < 2 ? "P0 is a monomial" : "T0 has " + std::to_string(c.t0.terms.size()) +
                                                             " monomials; the monomial criterion does not apply";
  if (sampler.enabled) {
    const TorusSample t =
        torus_point_sample(c.p0, c.t0, s.size(), sampler.prime, sampler.trials, sampler.seed);
    c.sampled = true;
    c.sample_prime = t.prime;
    c.sample_trials = t.trials;
    c.sample_successes = t.successes;
    if (t.found) {
      c.verdict = Verdict::kCertifiedProbabilistic;
      c.sample_coefficients = t.coefficients;
      c.sample_point = t.point;
      c.reason += "; a torus point of V(P0) off V(T0) was found over F_" + std::to_string(t.prime) +
                  " (" + std::to_string(t.successes) + "/" + std::to_string(t.trials) + " trials)";
    } else {
      c.reason += "; no torus point found over F_" + std::to_string(t.prime);
    }
  }
  return c;
}

// ---------------------------------------------------------------- binomials

bool binomial_applicable(const Support& s) {
  if (s.size() != 2) return false;
  for (std::size_t j = 0; j < s.num_vars; ++j) {
    if (s.exponents[0][j] > 0 && s.exponents[1][j] > 0) return false;
  }
  return true;
}

BinomialResult binomial_lambda(const Support& s) {
  if (!binomial_applicable(s)) {
    const ObjectiveMinimum m = minimize_objective(s);
    return {m.value, m.witness, false, m.seed_value};
  }
  const std::size_t k = s.num_vars;
  const Integer n = static_cast<long>(s.dimension());
  const LatticeVector& beta = s.exponents[0];
  const LatticeVector& gamma = s.exponents[1];
  Integer sb = 0, sg = 0;
  for (std::size_t j = 0; j < k; ++j) {
    sb += beta[j];
    sg += gamma[j];
  }
  const Integer g = gcd(sb, sg);
  std::vector<Integer> seed(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (beta[j] > 0) {
      seed[j] = sg / g;
    } else if (gamma[j] > 0) {
      seed[j] = sb / g;
    } else {
      seed[j] = 1;
    }
  }
  AlphaTuple best(seed);
  Integer bound = best.sum() - best.max() - n;
  BinomialResult out{bound, best, true, bound};

  std::vector<Integer> alpha(k);
  for (std::size_t top = 0; top < k; ++top) {
    const bool on_beta = beta[top] > 0;
    const LatticeVector& own = on_beta ? beta : gamma;
    const LatticeVector& other = on_beta ? gamma : beta;
    auto dfs = [&](auto&& self, std::size_t pos, const Integer& used, const Integer& mx) -> void {
      if (pos == top) {
        self(self, pos + 1, used, mx);
        return;
      }
      if (pos == k) {
        // own·α = other·α fixes α_top.
        Integer rhs = 0;
        for (std::size_t j = 0; j < k; ++j) {
          if (j == top) continue;
          rhs += other[j] * alpha[j] - own[j] * alpha[j];
        }
        if (rhs <= 0 || rhs % own[top] != 0) return;
        const Integer at = rhs / own[top];
        if (at < mx) return;
        alpha[top] = at;
        AlphaTuple a(alpha);
        const Integer v = used - n;
        if (v < out.lambda || (v == out.lambda && a < out.witness)) {
          out.lambda = v;
          out.witness = a;
        }
        return;
      }
      for (Integer v = 1; used + v + static_cast<long>(k - pos - 1 - (top > pos ? 1 : 0)) <=
                          out.lambda + n;
           ++v) {
        alpha[pos] = v;
        self(self, pos + 1, used + v, std::max(mx, v));
      }
    };
    dfs(dfs, 0, Integer(0), Integer(0));
  }
  return out;
}

// ---------------------------------------------------------------- report

HypersurfaceMldReport hypersurface_report(const Support& s, const HypersurfaceOptions& options) {
  HypersurfaceMldReport rep;
  rep.num_vars = s.num_vars;
  rep.original_num_vars = s.original_num_vars;
  rep.dropped_variables = s.dropped_variables;
  rep.assumptions = {"integral support", "very general coefficients"};
  const Integer dim = static_cast<long>(s.original_num_vars - 1);

  if (binomial_applicable(s) && !options.search.box_bound) {
    const BinomialResult b = binomial_lambda(s);
    rep.route = "binomial";
    rep.lambda_lower_bound = b.lambda;
    rep.witness_alpha = b.witness;
    rep.search_box_bound = b.seed_bound + static_cast<long>(s.dimension());
    rep.certificate = equality_certificate(s, b.witness);
    if (rep.certificate.verdict == Verdict::kUndecided) {
      rep.certificate.verdict = Verdict::kCertified;
      rep.certificate.reason = "binomial closed form";
    } else {
      rep.certificate.reason += "; binomial closed form";
    }
    rep.status = Status::kExact;
  } else {
    const ObjectiveMinimum m = minimize_objective(s, options.search);
    rep.route = "general";
    rep.lambda_lower_bound = m.value;
    rep.witness_alpha = m.witness;
    rep.search_box_bound = m.box_bound;
    // Prefer the smallest minimizer the monomial criterion certifies; the
    // sampler only runs when none does.
    rep.certificate = equality_certificate(s, m.witness);
    for (const auto& a : m.minimizers) {
      if (rep.certificate.verdict == Verdict::kCertified) break;
      auto c = equality_certificate(s, a);
      if (c.verdict == Verdict::kCertified) {
        rep.witness_alpha = a;
        rep.certificate = std::move(c);
      }
    }
    if (rep.certificate.verdict == Verdict::kUndecided) {
      rep.certificate = equality_certificate(s, m.witness, options.sampler);
    }
    if (m.heuristic) {
      rep.status = Status::kHeuristic;
    } else if (rep.certificate.verdict != Verdict::kUndecided) {
      rep.status = Status::kExact;
    } else {
      rep.status = Status::kLowerBound;
    }
    if (rep.certificate.verdict == Verdict::kCertifiedProbabilistic) {
      rep.assumptions.push_back("finite-field sampling stands in for very general coefficients");
    }
  }
  rep.mather_mld_lower_bound = rep.lambda_lower_bound + dim;
  return rep;
}

}  // namespace mld
