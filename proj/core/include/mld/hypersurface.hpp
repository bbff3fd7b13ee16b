#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mld/integer.hpp"
#include "mld/lattice.hpp"

namespace mld {

/// Exponent vectors of the monomials of f = Σ a_i x^{I^i}. The shape is
/// checked on construction; integrality is checked by validate_support.
struct Support {
  std::size_t num_vars = 0;
  std::vector<LatticeVector> exponents;
  /// Variables of the raw input, before unused ones were dropped.
  std::size_t original_num_vars = 0;
  std::vector<std::size_t> dropped_variables;

  Support() = default;
  Support(std::size_t num_vars, std::vector<LatticeVector> exponents);

  std::size_t size() const { return exponents.size(); }
  /// Dimension of the hypersurface: num_vars - 1.
  std::size_t dimension() const { return num_vars - 1; }
  Integer max_exponent() const;
};

struct SupportViolation {
  std::string clause;  // "shape", "origin", "coordinate-plane", "dimension"
  std::string detail;
};

struct SupportValidation {
  std::optional<Support> support;  // set iff no violations
  std::vector<SupportViolation> violations;
  std::vector<std::size_t> dropped_variables;
  std::size_t affine_dimension = 0;  // dim(A) after reduction
  bool ok() const { return violations.empty(); }
};

/// Drops unused variables and checks the integrality clauses.
SupportValidation validate_support(const std::vector<std::vector<Integer>>& raw);

/// Throws InputError listing the violated clauses.
Support require_integral(const std::vector<std::vector<Integer>>& raw);

/// Dimension of the affine span of the exponents.
std::size_t affine_dimension(const Support& s);

/// Strictly positive orders (α_1, ..., α_{n+1}).
class AlphaTuple {
 public:
  AlphaTuple() = default;
  explicit AlphaTuple(std::vector<Integer> orders);
  AlphaTuple(std::initializer_list<long> orders);

  std::size_t size() const { return orders_.size(); }
  const Integer& operator[](std::size_t j) const { return orders_[j]; }
  const std::vector<Integer>& orders() const { return orders_; }
  LatticeVector as_vector() const { return LatticeVector(orders_); }
  Integer max() const;
  Integer sum() const;

  bool operator==(const AlphaTuple& o) const { return orders_ == o.orders_; }
  bool operator<(const AlphaTuple& o) const { return orders_ < o.orders_; }
  std::string to_string() const;

 private:
  std::vector<Integer> orders_;
};

Integer dot(const AlphaTuple& alpha, const LatticeVector& exponent);

bool is_feasible(const Support& s, const AlphaTuple& alpha);

struct MuN0 {
  Integer n0;
  Integer mu;
  std::vector<std::size_t> n0_terms;                          // i with α·I^i = n0
  std::vector<std::pair<std::size_t, std::size_t>> mu_pairs;  // (i, j) attaining μ
};
MuN0 mu_and_n0(const Support& s, const AlphaTuple& alpha);

/// Σ(α_j - 1) + 1 - n0 + μ. Throws InputError for infeasible α.
Integer objective(const Support& s, const AlphaTuple& alpha);

struct SearchOptions {
  /// Replaces the certified coordinate bound; results become heuristic.
  std::optional<Integer> box_bound;
  /// Cap on the number of tuples visited before LimitExceeded.
  std::uint64_t max_visits = 50'000'000;
};

struct ObjectiveMinimum {
  Integer value;
  AlphaTuple witness;  // lexicographically smallest minimizer
  /// Every minimizer in the box, sorted, up to kMaxMinimizers of them.
  std::vector<AlphaTuple> minimizers;
  Integer seed_value;
  AlphaTuple seed;
  Integer box_bound;  // coordinate cap derived from the seed (or the override)
  bool heuristic = false;
  std::uint64_t visited = 0;
};
inline constexpr std::size_t kMaxMinimizers = 256;

ObjectiveMinimum minimize_objective(const Support& s, const SearchOptions& options = {});

/// A polynomial in the base variables x_j^{(α_j)} whose coefficients are the
/// generic symbols a_i scaled by integers.
struct GenericTerm {
  std::size_t coefficient;  // index i of a_i
  Integer multiplier;
  std::vector<Integer> exponents;
};
struct GenericPolynomial {
  std::size_t num_vars = 0;
  std::vector<GenericTerm> terms;
  bool is_monomial() const { return terms.size() == 1; }
  std::string to_string(const std::vector<std::string>& names = {}) const;
};

enum class Verdict { kCertified, kCertifiedProbabilistic, kUndecided };
std::string to_string(Verdict v);

struct TorusSample;

struct SamplerOptions {
  bool enabled = true;
  std::uint64_t prime = 10007;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
};

struct EqualityCertificate {
  Verdict verdict = Verdict::kUndecided;
  GenericPolynomial p0;
  GenericPolynomial p1;
  GenericPolynomial t0;
  std::size_t j0 = 0;
  Integer n0;
  Integer n0_prime;
  Integer mu;
  std::vector<std::size_t> sigma;
  std::string reason;
  // Sampler evidence, when it ran.
  bool sampled = false;
  std::uint64_t sample_prime = 0;
  std::size_t sample_trials = 0;
  std::size_t sample_successes = 0;
  std::vector<std::uint64_t> sample_coefficients;
  std::vector<std::uint64_t> sample_point;
};

EqualityCertificate equality_certificate(const Support& s, const AlphaTuple& alpha,
                                         const SamplerOptions& sampler = {.enabled = false});

struct BinomialResult {
  Integer lambda;
  AlphaTuple witness;
  bool closed_form = true;  // false when the general pipeline was used
  Integer seed_bound;
};
/// Requires two monomials on disjoint variable sets; otherwise falls back to
/// minimize_objective and clears closed_form.
BinomialResult binomial_lambda(const Support& s);
bool binomial_applicable(const Support& s);

enum class Status { kExact, kLowerBound, kHeuristic };
std::string to_string(Status s);

struct HypersurfaceOptions {
  SearchOptions search;
  SamplerOptions sampler;
};

struct HypersurfaceMldReport {
  Integer lambda_lower_bound;
  Integer mather_mld_lower_bound;
  Status status = Status::kLowerBound;
  AlphaTuple witness_alpha;
  EqualityCertificate certificate;
  Integer search_box_bound;
  std::string route;  // "binomial" or "general"
  std::size_t num_vars = 0;
  std::size_t original_num_vars = 0;
  std::vector<std::size_t> dropped_variables;
  std::vector<std::string> assumptions;
};

HypersurfaceMldReport hypersurface_report(const Support& s, const HypersurfaceOptions& options = {});

}  // namespace mld
