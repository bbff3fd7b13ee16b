#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mld/cone.hpp"
#include "mld/hilbert.hpp"
#include "mld/lattice.hpp"

namespace mld {

/// Φ(a) together with an n-element independent set attaining it.
struct PhiWitness {
  LatticeVector point;
  Integer value;
  std::vector<LatticeVector> chosen;  // in greedy order
};

enum class FastPath { kNone, kSmooth, kSurface, kSimplicialIsolated };

std::string to_string(FastPath p);

struct ToricMldReport {
  Integer lambda;
  Integer mather_mld;
  std::optional<PhiWitness> witness;
  Integer search_bound_used;
  FastPath fast_path = FastPath::kNone;
  std::size_t ambient_dimension = 0;  // n of the original cone
  std::size_t reduced_dimension = 0;  // rank of the cone the search ran on
  std::size_t torus_factor_rank = 0;
  std::optional<FaceSpec> face_reduced_from;
  std::vector<std::size_t> face_rays;  // indices into the original cone's rays
  std::size_t hilbert_basis_size = 0;
  std::uint64_t subsets_examined = 0;
};

struct MinimizeOptions {
  bool use_fast_paths = true;
  std::uint64_t max_subsets = 1'000'000;
};

/// Greedy selection by (pairing, lex). Throws InputError unless a is in the
/// interior of σ.
PhiWitness phi_greedy(const LatticeVector& a, const HilbertBasis& hb);

/// Exhaustive minimum over all independent n-subsets. Throws LimitExceeded
/// when there are more than `max_subsets` subsets.
PhiWitness phi_bruteforce(const LatticeVector& a, const HilbertBasis& hb,
                          std::uint64_t max_subsets = 1'000'000);

/// λ = min Φ(a) - n over interior lattice points of a full-dimensional cone.
ToricMldReport minimize_phi(const Cone& c, const MinimizeOptions& options = {});

/// dim T_{m,a}: exact when m reaches the largest pairing of a Φ-optimal set,
/// otherwise only the interval [(m+1)n - Φ(a), (m+1)n - m] is known.
struct OrbitDimension {
  bool exact = false;
  Integer lower;
  Integer upper;
  Integer threshold;
};
OrbitDimension orbit_dimension(const LatticeVector& a, std::int64_t m, const HilbertBasis& hb);

/// λ and mld-hat at the distinguished point of a face (the torus-fixed point
/// when no face is given).
ToricMldReport mld_at_point(const Cone& c, const std::optional<FaceSpec>& face = std::nullopt,
                            const MinimizeOptions& options = {});

}  // namespace mld
