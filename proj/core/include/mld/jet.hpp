#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mld/finite_field.hpp"
#include "mld/hypersurface.hpp"
#include "mld/integer.hpp"

namespace mld {

/// x_var^{(order)} raised to `exponent`.
struct JetFactor {
  std::size_t var;
  std::int64_t order;
  unsigned exponent;
  auto operator<=>(const JetFactor&) const = default;
};

struct JetTerm {
  Integer coefficient;  // multinomial factor (times a_source when coefficients are bound)
  std::size_t source;   // index of the monomial of f it came from
  std::vector<JetFactor> factors;  // sorted by (var, order)
  std::int64_t weight() const;
};

struct JetPolynomial {
  std::vector<JetTerm> terms;
  bool is_zero() const { return terms.empty(); }
  std::string to_string() const;
};

struct TruncatedExpansion {
  AlphaTuple alpha;
  std::int64_t m = 0;
  std::optional<std::uint64_t> prime;  // coefficients reduced mod p when set
  std::vector<Integer> coefficients;
  std::map<std::int64_t, JetPolynomial> g;  // s -> G_s for n0 <= s <= max weight
};

/// Substitutes x_j -> Σ_{u >= α_j} x_j^{(u)} t^u and keeps the coefficients of
/// t^s for n0 <= s <= max_weight (default m). Requires m >= max α_j. With
/// empty `coefficients` every a_i is 1.
TruncatedExpansion expand(const Support& s, const std::vector<Integer>& coefficients,
                          const AlphaTuple& alpha, std::int64_t m,
                          std::optional<std::uint64_t> prime = std::nullopt,
                          std::optional<std::int64_t> max_weight = std::nullopt);

struct StaircaseResult {
  bool empty = false;  // infeasible α: C^m_α is empty, nothing to solve
  std::int64_t window = 0;
  std::int64_t equations_solved = 0;
  std::int64_t free_parameter_count = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::int64_t estimated_dim = 0;
  std::int64_t formula_dim = 0;
  std::uint64_t prime = 0;
};

StaircaseResult staircase_verify(const Support& s, const AlphaTuple& alpha, std::int64_t m,
                                 std::uint64_t prime, std::size_t trials, std::uint64_t seed = 1);

struct TorusSample {
  bool found = false;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::vector<std::uint64_t> coefficients;
  std::vector<std::uint64_t> point;
  std::uint64_t prime = 0;
};

/// Looks for a point of the torus on V(P0) off V(T0) over F_p. Coefficients
/// are drawn per trial unless `fixed_coefficients` is given.
TorusSample torus_point_sample(const GenericPolynomial& p0, const GenericPolynomial& t0,
                               std::size_t num_coefficients, std::uint64_t prime,
                               std::size_t trials, std::uint64_t seed = 1,
                               const std::vector<std::uint64_t>& fixed_coefficients = {});

}  // namespace mld
