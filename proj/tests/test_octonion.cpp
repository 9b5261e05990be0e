#include "collar/octonion.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace collar;

namespace {

/// Hamilton product via scalar and vector parts.
Quaternion ham(const Quaternion& a, const Quaternion& b) {
  const Eigen::Vector3d u = a.tail<3>(), v = b.tail<3>();
  Quaternion out;
  out(0) = a(0) * b(0) - u.dot(v);
  out.tail<3>() = a(0) * v + b(0) * u + u.cross(v);
  return out;
}

Quaternion bar(const Quaternion& a) { return {a(0), -a(1), -a(2), -a(3)}; }

/// Cayley-Dickson product on pairs of quaternions, (a,b)(c,d) = (ac − d̄b, da + bc̄).
Octonion cd_oracle(const Octonion& x, const Octonion& y) {
  const Quaternion a = x.coords().head<4>(), b = x.coords().tail<4>();
  const Quaternion c = y.coords().head<4>(), d = y.coords().tail<4>();
  Octonion::Coords out;
  out.head<4>() = ham(a, c) - ham(bar(d), b);
  out.tail<4>() = ham(d, a) + ham(b, bar(c));
  return Octonion(out);
}

Octonion random_oct(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Octonion::Coords c;
  for (int i = 0; i < 8; ++i) c(i) = g(rng);
  return Octonion(c);
}

}  // namespace

TEST(Octonion, UnitAndTable) {
  for (int i = 0; i < 8; ++i) EXPECT_EQ((Octonion::one() * Octonion::unit(i)).coords(), Octonion::unit(i).coords());
  EXPECT_LT((Octonion::unit(1) * Octonion::unit(2) - Octonion::unit(3)).norm(), 1e-15);
  EXPECT_LT((Octonion::unit(4) * Octonion::unit(4) + Octonion::one()).norm(), 1e-15);
}

TEST(Octonion, AgreesWithCayleyDicksonOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Octonion x = random_oct(rng), y = random_oct(rng);
    EXPECT_LT((x * y - cd_oracle(x, y)).norm(), 1e-12);
  }
}

TEST(Octonion, NormIsMultiplicativeAndAlternative) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const Octonion x = random_oct(rng), y = random_oct(rng);
    EXPECT_NEAR((x * y).norm(), x.norm() * y.norm(), 1e-10 * x.norm() * y.norm());
    EXPECT_LT((x * (x * y) - (x * x) * y).norm(), 1e-10 * x.norm() * x.norm() * y.norm());
  }
}

TEST(Octonion, NotAssociative) {
  const Octonion i = Octonion::unit(1), j = Octonion::unit(2), e = Octonion::unit(4);
  EXPECT_GT(((i * j) * e - i * (j * e)).norm(), 1.0);
}

TEST(LeftMult, SquareAndFirstColumn) {
  const Element li = left_mult(Octonion::unit(1));
  EXPECT_LT((li.matrix() * li.matrix() + Matrix::Identity(8, 8)).norm(), 1e-14);
  EXPECT_LT((li.matrix().col(0) - Octonion::unit(1).coords()).norm(), 1e-15);
  EXPECT_THROW(left_mult(Octonion::one()), PreconditionError);
}

TEST(LeftRight, MatchProducts) {
  std::mt19937_64 rng(13);
  for (int q = 1; q < 8; ++q) {
    const Octonion x = random_oct(rng);
    const Octonion u = Octonion::unit(q);
    EXPECT_LT((left_mult(u).matrix() * x.coords() - (u * x).coords()).norm(), 1e-12);
    EXPECT_LT((right_mult(u).matrix() * x.coords() - (x * u).coords()).norm(), 1e-12);
  }
}

TEST(TrialityPlanes, AngleIsPiOverThree) {
  const TrialityFrame& t = triality_frame();
  const Vector c = principal_cosines(t.v_l, t.v_r);
  for (int i = 0; i < c.size(); ++i) EXPECT_NEAR(std::acos(c(i)), std::numbers::pi / 3, 1e-9);
}

TEST(G2, DimensionKillsOneAndCloses) {
  const Subspace g2 = derivation_algebra();
  EXPECT_EQ(g2.dim(), 14);
  for (const Element& a : g2.elements()) EXPECT_LT(a.matrix().col(0).norm(), 1e-10);
  EXPECT_LT(closure_residual(g2), 1e-9);
}

TEST(G2, ElementsAreDerivations) {
  std::mt19937_64 rng(14);
  const Subspace g2 = derivation_algebra();
  for (int t = 0; t < 10; ++t) {
    const Element d = test::random_in(g2, rng);
    const Octonion x = random_oct(rng), y = random_oct(rng);
    const Octonion dx(d.matrix() * x.coords()), dy(d.matrix() * y.coords());
    const Octonion dxy(d.matrix() * (x * y).coords());
    EXPECT_LT((dxy - (dx * y + x * dy)).norm(), 1e-9);
  }
}

TEST(Triality, Spin7Forms) {
  const TrialityFrame& t = triality_frame();
  for (const Subspace* s : {&t.so7_0, &t.so7_plus, &t.so7_minus}) {
    EXPECT_EQ(s->dim(), 21);
    EXPECT_LT(closure_residual(*s), 1e-9);
  }
  for (const Element& a : t.so7_0.elements()) EXPECT_LT(a.matrix().col(0).norm(), 1e-10);
  EXPECT_EQ(intersect(t.so7_plus, t.so7_minus).dim(), 14);
  EXPECT_EQ(intersect(t.so7_0, t.so7_plus).dim(), 14);
  EXPECT_EQ(intersect(t.so7_0, t.so7_minus).dim(), 14);
  EXPECT_LT(inclusion_residual(t.g2, intersect(t.so7_plus, t.so7_minus)), 1e-9);
}

TEST(DirectSum, RankAndSplit) {
  EXPECT_EQ(direct_sum_rank(), 28);
  std::mt19937_64 rng(15);
  const Element x = test::random_skew(8, rng);
  const DirectSumParts parts = split_direct_sum(x);
  EXPECT_LT(test::dist(parts.g2 + parts.l + parts.r, x), 1e-10);
  const TrialityFrame& t = triality_frame();
  EXPECT_TRUE(t.v_l.contains(parts.l, 1e-9));
  EXPECT_TRUE(t.v_r.contains(parts.r, 1e-9));
}

TEST(LeftRight, CommutatorLandsInSpan) {
  const TrialityFrame& t = triality_frame();
  const Element c = bracket(left_mult(Octonion::unit(1)), right_mult(Octonion::unit(2)));
  EXPECT_TRUE(sum(t.g2, sum(t.v_l, t.v_r)).contains(c, 1e-9));
}
