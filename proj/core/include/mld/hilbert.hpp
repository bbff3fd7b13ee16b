#pragma once

#include <vector>

#include "mld/cone.hpp"
#include "mld/lattice.hpp"

namespace mld {

/// The irreducible elements of the semigroup M ∩ σ∨.
struct HilbertBasis {
  Cone dual;                            // σ∨
  std::vector<LatticeVector> elements;  // lexicographic order
  LatticeVector grading;                // v0 in Int(σ); ⟨u, v0⟩ > 0 for u ≠ 0
};

/// Simplices of a pulling triangulation of a full-dimensional pointed cone,
/// each given as indices into c.rays().
std::vector<std::vector<std::size_t>> pulling_triangulation(const Cone& c);

/// Nonzero lattice points Σ λ_i r_i with 0 <= λ_i < 1 for linearly
/// independent rows r_i, lexicographically sorted.
std::vector<LatticeVector> parallelepiped_points(std::span<const LatticeVector> rays);

/// Throws InputError unless `dual` is full-dimensional.
HilbertBasis hilbert_basis(const Cone& dual);

/// u is irreducible iff no candidate v other than u with u - v ∈ σ∨. Exact
/// whenever the candidates contain the Hilbert basis.
bool is_irreducible(const LatticeVector& u, std::span<const LatticeVector> candidates,
                    const Cone& dual);

/// Same predicate, enumerating every lattice point of σ∨ of smaller grading.
bool is_irreducible(const LatticeVector& u, const Cone& dual);

}  // namespace mld
