#pragma once

#include <span>
#include <vector>

#include "mld/integer.hpp"
#include "mld/lattice.hpp"

namespace mld {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> point;
};

/// Minimizes ⟨objective, x⟩ over x ∈ Q^n subject to ⟨normal_i, x⟩ >= offset_i.
/// Two-phase dense simplex over exact rationals with Bland's rule, so it
/// always terminates.
LpResult lp_minimize(std::span<const Rational> objective,
                     std::span<const std::vector<Rational>> normals,
                     std::span<const Rational> offsets);

/// Convenience overload on integer half-spaces.
LpResult lp_minimize(const LatticeVector& objective, std::span<const HalfSpace> constraints);

/// True iff {x : ⟨normal_i, x⟩ >= offset_i} is nonempty.
bool lp_feasible(std::size_t ambient_rank, std::span<const HalfSpace> constraints);

}  // namespace mld
