#include "collar/algebras.hpp"
#include "collar/catalog.hpp"
#include "collar/condition.hpp"
#include "collar/octonion.hpp"
#include "collar/triple.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace collar;

namespace {

Triple g2_so0_so(int n) {
  const TrialityFrame& t = triality_frame();
  Triple tr;
  tr.name = "g2 < spin7_0 < so(n)";
  tr.g = so_block(n, n, 0);
  tr.k = embed(t.so7_0, n, 0);
  tr.h = embed(t.g2, n, 0);
  return tr;
}

std::vector<int> component_dims(const Decomposition& d) {
  std::vector<int> out;
  for (const Component& c : d.components) out.push_back(c.space.dim());
  std::sort(out.begin(), out.end());
  return out;
}

double cross(const Subspace& a, const Subspace& b) {
  if (a.empty() || b.empty()) return 0.0;
  return (a.flat_basis().transpose() * b.flat_basis()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Decompose, DegenerateWhenHEqualsK) {
  Triple t = build("sp-rank4", 1);
  t.h = t.k;
  const Decomposition d = decompose(t);
  EXPECT_EQ(d.m.dim(), 0);
  EXPECT_EQ(d.k0.dim(), 0);
}

TEST(Decompose, G2InSpin7InSo8) {
  const Decomposition d = decompose(build("g2-so0-7-so8p", 0));
  EXPECT_EQ(d.m.dim(), 7);
  EXPECT_EQ(d.s.dim(), 7);
  EXPECT_EQ(d.k0.dim(), 21);
  EXPECT_EQ(d.hprime.dim(), 0);
  EXPECT_EQ(d.h1.dim(), 14);
  EXPECT_EQ(d.m1.dim(), 7);
  EXPECT_LT(inclusion_residual(d.h1, triality_frame().g2), 1e-9);
}

TEST(Decompose, Spin9OverrideRow) {
  const Decomposition d = decompose(build("sphere-spin9", 0));
  EXPECT_TRUE(d.h1_overridden);
  EXPECT_EQ(d.h1.dim(), 28);
  EXPECT_EQ(d.m1.dim(), 8);
}

TEST(Decompose, SpacesAreOrthogonalAndFill) {
  for (const char* id : {"g2-so0-7-so8p", "su3-su4-spin7", "sp2-su4-su5", "sp-series", "g2-so4-rank3"}) {
    const Decomposition d = decompose(build(id, find_entry(id).p_default));
    EXPECT_LT(cross(d.triple.h, d.m), 1e-10) << id;
    EXPECT_LT(cross(d.triple.h, d.s), 1e-10) << id;
    EXPECT_LT(cross(d.m, d.s), 1e-10) << id;
    EXPECT_LT(cross(d.h1, d.m1), 1e-10) << id;
    EXPECT_EQ(d.triple.h.dim() + d.m.dim() + d.s.dim(), d.triple.g.dim()) << id;
    EXPECT_EQ(d.m.dim() + d.s.dim(), d.p.dim()) << id;
    EXPECT_LT(bracket_residual(d.triple.h, d.m, d.m), 1e-9) << id;
    EXPECT_LT(bracket_residual(d.triple.k, d.s, d.s), 1e-9) << id;
    EXPECT_LT(inclusion_residual(d.m1, d.m), 1e-9) << id;
  }
}

TEST(Isotypic, G2InSpin70InSo9) {
  const Decomposition d = decompose(g2_so0_so(9));
  EXPECT_EQ(d.s.dim(), 15);
  EXPECT_EQ(component_dims(d), (std::vector<int>{7, 7}));
  EXPECT_EQ(d.z_l.dim(), 1);
  int phi1 = 0;
  for (const Component& c : d.components) phi1 += c.phi.verdict == PhiClass::Phi1;
  EXPECT_GE(phi1, 1);
}

TEST(Isotypic, SpinPlusCase) {
  const Decomposition d = decompose(build("spin-octonion-case1", 0));
  ASSERT_EQ(component_dims(d), (std::vector<int>{7, 8}));
  for (const Component& c : d.components)
    EXPECT_EQ(c.phi.verdict, c.space.dim() == 7 ? PhiClass::Phi1 : PhiClass::Phi2);
}

TEST(Isotypic, SpinTypeComponentIsPhi2) {
  const Decomposition d = decompose(build("spin7-so8-so9p", 0));
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0].space.dim(), 8);
  EXPECT_EQ(d.components[0].phi.verdict, PhiClass::Phi2);
}

TEST(Isotypic, ConjugationPreservesComponentDims) {
  std::mt19937_64 rng(31);
  const Triple t = build("spin-octonion-case1", 0);
  const Decomposition d0 = decompose(t);
  const Decomposition d1 = decompose(conjugate(t, test::random_orthogonal(t.ambient_dim(), rng)));
  EXPECT_EQ(component_dims(d0), component_dims(d1));
  EXPECT_EQ(d0.m1.dim(), d1.m1.dim());
  EXPECT_EQ(d0.z_l.dim(), d1.z_l.dim());
}

TEST(ClassifyPhi, KernelOfWholeSpaceIsPhi1) {
  const Decomposition d = decompose(g2_so0_so(9));
  const Subspace centralized = solve_commutant(d.m1.elements(), d.s);
  if (centralized.empty()) GTEST_SKIP() << "no vector of s commutes with all of m1";
  EXPECT_EQ(classify_phi(d, centralized, 4).verdict, PhiClass::Phi1);
}

TEST(Transitivity, CommutingPairOnCertifiedTriple) {
  const Decomposition d = decompose(build("g2-so0-7-so8p", 0));
  ASSERT_FALSE(d.components.empty());
  const PhiEvidence& ev = d.components[0].phi;
  ASSERT_EQ(ev.verdict, PhiClass::Phi1);
  EXPECT_LT(norm(bracket(ev.x_m, ev.y_s)), 1e-8 * norm(ev.x_m) * norm(ev.y_s));
  EXPECT_TRUE(transitivity_check(d, ev.y_s));
}

TEST(Transitivity, NonCommutingWitnessPartFails) {
  const Witness w = builtin_witness("spin-octonion-case1", 0);
  const Decomposition d = decompose(w.triple);
  const Element ys = d.s.project(w.y);
  EXPECT_GT(norm(bracket(d.m1.project(w.x), ys)), 0.1);
  EXPECT_FALSE(transitivity_check(d, ys));
}

TEST(Transitivity, Preconditions) {
  const Decomposition d = decompose(build("g2-so0-7-so8p", 0));
  EXPECT_THROW(transitivity_check(d, Element::zero(8)), PreconditionError);
  EXPECT_THROW(transitivity_check(d, d.m.element(0)), PreconditionError);
}

TEST(SymmetricPair, Examples) {
  for (int p = 0; p <= 2; ++p) {
    const int n = 9 + p;
    EXPECT_TRUE(symmetric_pair_check(so_block(n, n, 0), sum(so_block(8, n, 0), so_block(p + 1, n, 8)))) << p;
  }
  EXPECT_TRUE(symmetric_pair_check(make_so(8).space, triality_frame().so7_0));
  EXPECT_FALSE(symmetric_pair_check(make_so(5).space, Subspace::span({test::E(5, 1, 2)})));
}

TEST(SymmetricPair, SpinPlusIsNotSymmetric) {
  EXPECT_TRUE(symmetric_pair_check(make_so(8).space, triality_frame().so7_plus));
  EXPECT_FALSE(symmetric_pair_check(make_so(8).space, triality_frame().g2));
}

TEST(Validate, RejectsBrokenTriples) {
  Triple t = build("su3-su4-spin7", 0);
  std::swap(t.h, t.k);
  EXPECT_THROW(validate(t), PreconditionError);
  Triple u = build("su3-su4-spin7", 0);
  u.k = Subspace::span({test::E(7, 1, 2), test::E(7, 2, 3)});
  EXPECT_THROW(validate(u), PreconditionError);
}

TEST(Closure, IdealAndGeneratedSubalgebra) {
  const Subspace gen = generated_subalgebra(Subspace::span({test::E(4, 1, 2), test::E(4, 2, 3)}));
  EXPECT_EQ(gen.dim(), 3);
  const Subspace so4 = make_so(4).space;
  EXPECT_EQ(ideal_closure(Subspace::span({test::E(4, 1, 2) + test::E(4, 3, 4)}), so4).dim(), 3);
}
