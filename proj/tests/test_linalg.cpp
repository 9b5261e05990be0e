#include "collar/linalg.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace collar;
using collar::test::E;

TEST(Inner, BasisNormsAndOrthogonality) {
  EXPECT_DOUBLE_EQ(inner(E(3, 1, 2), E(3, 1, 2)), 2.0);
  EXPECT_DOUBLE_EQ(inner(E(3, 1, 2), E(3, 1, 3)), 0.0);
}

TEST(Inner, MatchesNegativeTrace) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const Element x = test::random_skew(6, rng), y = test::random_skew(6, rng);
    EXPECT_NEAR(inner(x, y), -(x.matrix() * y.matrix()).trace(), 1e-10);
  }
}

TEST(Inner, ConjugationInvariant) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const Element x = test::random_skew(7, rng), y = test::random_skew(7, rng);
    const Matrix g = test::random_orthogonal(7, rng);
    EXPECT_NEAR(inner(conjugate(x, g), conjugate(y, g)), inner(x, y), 1e-10);
  }
}

TEST(Bracket, SelfBracketVanishes) {
  std::mt19937_64 rng(3);
  const Element x = test::random_skew(5, rng);
  EXPECT_EQ(norm(bracket(x, x)), 0.0);
}

TEST(Bracket, BasisSign) {
  const Element b = bracket(E(3, 1, 2), E(3, 2, 3));
  EXPECT_LT(test::dist(b, -E(3, 1, 3)), 1e-15);
  EXPECT_LT((b.matrix() - test::commutator(E(3, 1, 2).matrix(), E(3, 2, 3).matrix())).norm(), 1e-15);
}

TEST(Bracket, BasisConventionActsOnVectors) {
  const Element e = Element::basis(4, 1, 3);
  EXPECT_DOUBLE_EQ((e.matrix() * Vector::Unit(4, 1))(3), 1.0);
}

TEST(Bracket, JacobiIdentity) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const Element x = test::random_skew(6, rng), y = test::random_skew(6, rng), z = test::random_skew(6, rng);
    const Element j = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
    EXPECT_LT(norm(j), 1e-10 * std::pow(norm(x) * norm(y) * norm(z), 1.0));
  }
}

TEST(Bracket, MatchesDenseOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Element x = test::random_skew(5, rng), y = test::random_skew(5, rng);
    EXPECT_LT((bracket(x, y).matrix() - test::commutator(x.matrix(), y.matrix())).norm(), 1e-12);
  }
}

TEST(Wedge, Examples) {
  EXPECT_NEAR(wedge_norm((1 / std::sqrt(2.0)) * E(4, 1, 2), (1 / std::sqrt(2.0)) * E(4, 3, 4)), 1.0, 1e-15);
  EXPECT_NEAR(wedge_norm(E(4, 1, 2), 3.0 * E(4, 1, 2)), 0.0, 1e-15);
  EXPECT_NEAR(wedge_norm(E(4, 1, 2), E(4, 1, 2) + E(4, 3, 4)), 2.0, 1e-14);
}

TEST(Wedge, GramOracleOnRandomPairs) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const Element x = test::random_skew(6, rng), y = test::random_skew(6, rng);
    EXPECT_NEAR(wedge_norm(x, y), test::gram_wedge(x.matrix(), y.matrix()), 1e-9 * norm(x) * norm(y));
  }
}

TEST(Orthonormalize, Dimensions) {
  EXPECT_EQ(Subspace::span({E(3, 1, 2), 2.0 * E(3, 1, 2)}).dim(), 1);
  EXPECT_EQ(Subspace::span({E(3, 1, 2), E(3, 1, 3), E(3, 2, 3)}).dim(), 3);
  std::vector<Element> all;
  for (int r = 1; r <= 8; ++r)
    for (int s = r + 1; s <= 8; ++s) all.push_back(E(8, r, s));
  const Subspace so8 = Subspace::span(all);
  EXPECT_EQ(so8.dim(), 28);
  EXPECT_LT(so8.gram_defect(), 1e-12);
}

TEST(Project, Examples) {
  const Subspace u = Subspace::span({E(4, 1, 2), E(4, 1, 3)});
  EXPECT_LT(test::dist(u.project(E(4, 1, 3)), E(4, 1, 3)), 1e-14);
  EXPECT_LT(norm(u.project(E(4, 3, 4))), 1e-15);
  const Subspace line = Subspace::span({E(4, 1, 2)});
  EXPECT_LT(test::dist(line.project(E(4, 1, 2) + E(4, 3, 4)), E(4, 1, 2)), 1e-14);
}

TEST(Project, IdempotentAndSelfAdjoint) {
  std::mt19937_64 rng(7);
  std::vector<Element> gens;
  for (int i = 0; i < 5; ++i) gens.push_back(test::random_skew(6, rng));
  const Subspace u = Subspace::span(gens);
  for (int t = 0; t < 10; ++t) {
    const Element x = test::random_skew(6, rng), y = test::random_skew(6, rng);
    EXPECT_LT(test::dist(u.project(u.project(x)), u.project(x)), 1e-12);
    EXPECT_NEAR(inner(u.project(x), y), inner(x, u.project(y)), 1e-10);
  }
}

TEST(Intersect, Examples) {
  const Subspace u = Subspace::span({E(4, 1, 2), E(4, 1, 3)});
  EXPECT_EQ(intersect(u, u).dim(), 2);
  EXPECT_EQ(intersect(Subspace::span({E(4, 1, 2)}), Subspace::span({E(4, 3, 4)})).dim(), 0);
  const Subspace w = intersect(u, Subspace::span({E(4, 1, 3), E(4, 1, 4)}));
  ASSERT_EQ(w.dim(), 1);
  EXPECT_TRUE(w.contains(E(4, 1, 3)));
}

TEST(Intersect, DimensionFormula) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    std::vector<Element> a, b;
    for (int i = 0; i < 6; ++i) a.push_back(test::random_skew(5, rng));
    for (int i = 0; i < 7; ++i) b.push_back(test::random_skew(5, rng));
    const Subspace u = Subspace::span(a), w = Subspace::span(b);
    EXPECT_EQ(intersect(u, w).dim() + sum(u, w).dim(), u.dim() + w.dim());
  }
}

TEST(Commutant, Examples) {
  std::vector<Element> so3;
  for (int r = 1; r <= 3; ++r)
    for (int s = r + 1; s <= 3; ++s) so3.push_back(E(3, r, s));
  const Subspace so3s = Subspace::span(so3);
  EXPECT_EQ(solve_commutant({}, so3s).dim(), 3);
  const Subspace c = solve_commutant({E(3, 1, 2)}, so3s);
  ASSERT_EQ(c.dim(), 1);
  EXPECT_TRUE(c.contains(E(3, 1, 2)));

  std::vector<Element> so5, block;
  for (int r = 1; r <= 5; ++r)
    for (int s = r + 1; s <= 5; ++s) so5.push_back(E(5, r, s));
  for (int r = 1; r <= 3; ++r)
    for (int s = r + 1; s <= 3; ++s) block.push_back(E(5, r, s));
  const Subspace z = solve_commutant(block, Subspace::span(so5));
  ASSERT_EQ(z.dim(), 1);
  EXPECT_TRUE(z.contains(E(5, 4, 5)));
}

TEST(Normalizer, OfBlockInSo5) {
  std::vector<Element> so5, block;
  for (int r = 1; r <= 5; ++r)
    for (int s = r + 1; s <= 5; ++s) so5.push_back(E(5, r, s));
  for (int r = 1; r <= 3; ++r)
    for (int s = r + 1; s <= 3; ++s) block.push_back(E(5, r, s));
  EXPECT_EQ(normalizer(Subspace::span(block), Subspace::span(so5)).dim(), 4);
  EXPECT_EQ(normalizer(Subspace::span(so5), Subspace::span(so5)).dim(), 10);
}

TEST(PrincipalCosines, OrthogonalLinesAndSelf) {
  const Subspace a = Subspace::span({E(4, 1, 2)}), b = Subspace::span({E(4, 3, 4)});
  EXPECT_NEAR(principal_cosines(a, b)(0), 0.0, 1e-15);
  EXPECT_NEAR(principal_cosines(a, a)(0), 1.0, 1e-15);
}

TEST(Errors, DimensionMismatchAndSkewCheck) {
  EXPECT_THROW(inner(E(3, 1, 2), E(4, 1, 2)), DimensionMismatch);
  EXPECT_THROW(Element(Matrix::Identity(3, 3)), PreconditionError);
}
