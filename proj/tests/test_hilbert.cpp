#include <gtest/gtest.h>

#include "mld/cone.hpp"
#include "mld/errors.hpp"
#include "mld/hilbert.hpp"
#include "oracles.hpp"

using mld::Cone;
using mld::LatticeVector;

namespace {

std::vector<LatticeVector> vs(std::initializer_list<LatticeVector> l) { return l; }

}  // namespace

TEST(HilbertBasis, QuadricCone) {
  auto hb = mld::hilbert_basis(Cone::from_generators(2, {{1, 0}, {1, 2}}));
  EXPECT_EQ(hb.elements, vs({{1, 0}, {1, 1}, {1, 2}}));
}

TEST(HilbertBasis, Orthant) {
  auto hb = mld::hilbert_basis(Cone::from_generators(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(hb.elements, vs({{0, 1}, {1, 0}}));
}

TEST(HilbertBasis, HandSieve) {
  auto hb = mld::hilbert_basis(Cone::from_generators(2, {{1, 0}, {1, 3}}));
  EXPECT_EQ(hb.elements, vs({{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(hb.elements, oracle::to_lvs(oracle::naive_hilbert_simplicial({{1, 0}, {1, 3}})));
}

TEST(HilbertBasis, ThreeDimensionalSimplicial) {
  // cone((1,0,0),(0,1,0),(1,1,2)): the classic A1 x C singularity dual.
  std::vector<oracle::IVec> rays{{1, 0, 0}, {0, 1, 0}, {1, 1, 2}};
  auto hb = mld::hilbert_basis(Cone::from_generators(3, oracle::to_lvs(rays)));
  EXPECT_EQ(hb.elements, oracle::to_lvs(oracle::naive_hilbert_simplicial(rays)));
}

TEST(HilbertBasis, NonSimplicialCone) {
  // The square pyramid is smooth on each triangle; its Hilbert basis is its rays.
  auto sq = Cone::from_generators(3, {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  auto hb = mld::hilbert_basis(sq);
  EXPECT_EQ(hb.elements, sq.rays());
}

TEST(HilbertBasis, GradingIsPositive) {
  auto hb = mld::hilbert_basis(Cone::from_generators(2, {{1, 0}, {1, 3}}));
  for (const auto& u : hb.elements) EXPECT_GT(mld::pairing(u, hb.grading), 0);
}

TEST(HilbertBasis, RejectsLowerDimension) {
  EXPECT_THROW(mld::hilbert_basis(Cone::from_generators(2, {{1, 0}})), mld::InputError);
}

TEST(Parallelepiped, CountEqualsDeterminantMinusOne) {
  auto pts = mld::parallelepiped_points(vs({{1, 0}, {1, 3}}));
  EXPECT_EQ(pts, vs({{1, 1}, {1, 2}}));
  auto p3 = mld::parallelepiped_points(vs({{2, 0, 0}, {0, 2, 0}, {0, 0, 1}}));
  EXPECT_EQ(p3.size(), 3u);
}

TEST(PullingTriangulation, CoversSquareWithTwoSimplices) {
  auto sq = Cone::from_generators(3, {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  auto t = mld::pulling_triangulation(sq);
  EXPECT_EQ(t.size(), 2u);
  for (const auto& s : t) EXPECT_EQ(s.size(), 3u);
}

TEST(Irreducible, Examples) {
  auto d = Cone::from_generators(2, {{1, 0}, {1, 2}});
  EXPECT_TRUE(mld::is_irreducible({1, 1}, d));
  EXPECT_FALSE(mld::is_irreducible({2, 2}, d));
  auto o = Cone::from_generators(2, {{1, 0}, {0, 1}});
  EXPECT_FALSE(mld::is_irreducible({2, 0}, o));
  EXPECT_THROW(mld::is_irreducible({-1, 0}, o), mld::InputError);

  std::vector<LatticeVector> cands{{1, 0}, {1, 1}, {1, 2}};
  EXPECT_TRUE(mld::is_irreducible({1, 2}, cands, d));
  EXPECT_FALSE(mld::is_irreducible({2, 3}, cands, d));
}
