#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "mld/lattice.hpp"

namespace mld {

enum class Membership { kClosed, kInterior };

/// A rational polyhedral cone containing no line, given by ray generators.
/// Generators are normalized to primitive vectors and reduced to the extreme
/// rays, which are kept in lexicographic order.
class Cone {
 public:
  /// Throws InputError for an empty generator list, a zero or wrong-rank
  /// generator, or a cone that contains a line.
  static Cone from_generators(std::size_t ambient_rank, std::vector<LatticeVector> generators);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  /// Rank of the span of the rays.
  std::size_t dimension() const { return span_.rank(); }
  bool is_full_dimensional() const { return dimension() == ambient_rank_; }

  /// Primitive inward facet normals. For a full-dimensional cone these are
  /// the extreme rays of the dual cone; otherwise they live in the
  /// coordinates of span_basis().
  const std::vector<LatticeVector>& facet_normals() const { return facets_; }
  const SublatticeBasis& span_basis() const { return span_; }

  bool contains(const LatticeVector& a, Membership mode = Membership::kClosed) const;

  /// Sum of the extreme rays (an interior point of the relative interior).
  LatticeVector ray_sum() const;

  bool operator==(const Cone& o) const {
    return ambient_rank_ == o.ambient_rank_ && rays_ == o.rays_;
  }

 private:
  Cone(std::size_t ambient_rank, std::vector<LatticeVector> rays, SublatticeBasis span);

  std::size_t ambient_rank_;
  std::vector<LatticeVector> rays_;
  SublatticeBasis span_;
  std::vector<LatticeVector> facets_;
};

/// Extreme rays of {u : ⟨u,g⟩ >= 0 for all g} by double description.
/// Only defined for full-dimensional cones (InputError otherwise), since the
/// dual of a lower-dimensional cone contains a line.
Cone dual_cone(const Cone& c);

bool membership(const Cone& c, const LatticeVector& a, Membership mode);

std::size_t span_rank(const Cone& c);

struct TorusSplit {
  Cone cone;               // full-dimensional in Z^k
  std::size_t torus_rank;  // n - k
};
TorusSplit split_torus_factor(const Cone& c);

/// A face given by a supporting functional u ∈ σ∨ (the face is u^⊥ ∩ σ).
struct FunctionalFace {
  LatticeVector functional;
};
/// A face given by indices into Cone::rays().
struct RaySubsetFace {
  std::vector<std::size_t> indices;
};
using FaceSpec = std::variant<FunctionalFace, RaySubsetFace>;

/// Indices (into c.rays()) of the rays of the face, after validation.
/// Throws InputError naming the offending ray if the spec is not a face.
std::vector<std::size_t> face_ray_indices(const Cone& c, const FaceSpec& f);

/// The face as a full-dimensional cone in a basis of the saturated span of
/// its rays. The zero face has no such cone and is rejected.
Cone face_cone(const Cone& c, const FaceSpec& f);

/// Every facet as a ray subset, in the order of c.facet_normals().
std::vector<std::vector<std::size_t>> facets(const Cone& c);

bool is_simplicial(const Cone& c);
bool is_smooth(const Cone& c);
bool has_isolated_fixed_point(const Cone& c);

}  // namespace mld
