#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mld/integer.hpp"

namespace mld {

/// An element of Z^n, used for both N (points, rays of cones) and its dual M
/// (functionals). Immutable once built.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> entries);
  LatticeVector(std::initializer_list<long> entries);

  static LatticeVector zero(std::size_t rank);
  static LatticeVector unit(std::size_t rank, std::size_t index);

  std::size_t rank() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const;
  /// gcd of the entries; 0 for the zero vector.
  Integer content() const;
  /// The vector divided by its content (the zero vector is returned as is).
  LatticeVector primitive() const;

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  LatticeVector scaled(const Integer& k) const;

  bool operator==(const LatticeVector& o) const;
  /// Lexicographic order; shorter vectors sort first.
  std::strong_ordering operator<=>(const LatticeVector& o) const;

  std::string to_string() const;

 private:
  std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// The canonical pairing M x N -> Z. Throws InputError on a rank mismatch.
Integer pairing(const LatticeVector& u, const LatticeVector& a);

/// Rank over Q (Bareiss fraction-free elimination). Empty input has rank 0.
std::size_t rank_of(std::span<const LatticeVector> vectors);

/// Determinant of a square integer matrix given by rows.
Integer determinant(std::span<const LatticeVector> rows);

/// Adjugate of a square matrix given by rows: rows * adj = det * I.
std::vector<LatticeVector> adjugate(std::span<const LatticeVector> rows);

/// Smith normal form of a k x n integer matrix A given by rows:
/// U * A * W = diag(d_1, ..., d_r, 0, ...) with U, W unimodular and
/// d_1 | d_2 | ... | d_r. Only the column transform W and its inverse are kept.
struct SmithForm {
  std::size_t rank = 0;
  std::vector<Integer> diagonal;        // d_1..d_r, all positive
  std::vector<LatticeVector> column;    // W, n rows of length n
  std::vector<LatticeVector> column_inverse;  // V = W^{-1}
};
SmithForm smith_normal_form(std::span<const LatticeVector> rows, std::size_t ambient_rank);

/// A basis of a saturated sublattice L = Span_Q(L) ∩ Z^n together with the
/// change of coordinates onto it.
class SublatticeBasis {
 public:
  SublatticeBasis(std::span<const LatticeVector> generators, std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<LatticeVector>& basis() const { return basis_; }
  /// Complement vectors: basis() followed by complement() is a basis of Z^n.
  const std::vector<LatticeVector>& complement() const { return complement_; }

  bool contains(const LatticeVector& v) const;
  /// Integer coordinates of v with respect to basis(). Throws InputError if v
  /// is not in the Q-span.
  LatticeVector coordinates(const LatticeVector& v) const;
  /// Inverse of coordinates().
  LatticeVector embed(const LatticeVector& coords) const;

 private:
  std::size_t ambient_rank_;
  std::vector<LatticeVector> basis_;
  std::vector<LatticeVector> complement_;
  std::vector<LatticeVector> to_coordinates_;  // W: v * W gives coordinates
};

/// A lattice basis of the saturation Span_Q(vectors) ∩ Z^n.
std::vector<LatticeVector> saturate(std::span<const LatticeVector> vectors);

/// ⟨normal, x⟩ >= offset.
struct HalfSpace {
  LatticeVector normal;
  Integer offset;
};

class RationalPolytope {
 public:
  RationalPolytope(std::size_t ambient_rank, std::vector<HalfSpace> inequalities);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<HalfSpace>& inequalities() const { return inequalities_; }
  bool contains(const LatticeVector& x) const;

 private:
  std::size_t ambient_rank_;
  std::vector<HalfSpace> inequalities_;
};

/// All integer points of a bounded polytope in lexicographic order.
/// Coordinate bounds come from an exact simplex; an unbounded polytope raises
/// UnboundedError.
std::vector<LatticeVector> enumerate_lattice_points(const RationalPolytope& p);

}  // namespace mld
