#include "collar/catalog.hpp"
#include "collar/condition.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace collar;
using collar::test::E;

namespace {

const Decomposition& dec_of(const std::string& id, int p) {
  static std::map<std::pair<std::string, int>, Decomposition> cache;
  auto it = cache.find({id, p});
  if (it == cache.end()) it = cache.emplace(std::make_pair(id, p), decompose(build(id, p))).first;
  return it->second;
}

}  // namespace

TEST(Rho, ScaleInvariance) {
  std::mt19937_64 rng(41);
  const Decomposition& d = dec_of("su3-su4-spin7", 0);
  const Subspace dom = sum(d.m_eff(), d.s);
  for (int t = 0; t < 10; ++t) {
    const Element x = test::random_in(dom, rng), y = test::random_in(dom, rng);
    for (double a : {0.01, 3.0, -7.5}) EXPECT_NEAR(rho(d, a * x, a * y), rho(d, x, y), 1e-10 * rho(d, x, y));
  }
}

TEST(Rho, PositiveOnSpherePairs) {
  std::mt19937_64 rng(42);
  const Decomposition& d = dec_of("sp-rank4", 1);
  const Subspace dom = sum(d.m_eff(), d.s);
  for (int t = 0; t < 200; ++t) EXPECT_GT(rho(d, test::random_in(dom, rng), test::random_in(dom, rng)), 0.0);
}

TEST(Rho, ExplicitOctonionWitness) {
  const int n = 9;
  const Element x = E(n, 1, 2) + E(n, 3, 9);
  const Element y = E(n, 1, 3) + E(n, 2, 9);
  EXPECT_LT(test::commutator(x.matrix(), y.matrix()).norm(), 1e-15);
  const Decomposition& d = dec_of("spin-octonion-case1", 0);
  EXPECT_LT(rho(d, x, y), 1e-12);
  EXPECT_EQ(verify_witness(d, x, y).kind, VerdictKind::ViolationWitness);
}

TEST(Rho, RejectsDegeneratePairs) {
  const Decomposition& d = dec_of("su3-su4-spin7", 0);
  const Element x = d.m.element(0);
  EXPECT_THROW(rho(d, x, 2.0 * x), PreconditionError);
  EXPECT_THROW(rho(d, d.triple.h.element(0), x), PreconditionError);
}

TEST(CertifyBracket, CertifiedTriples) {
  for (auto [id, p] : std::vector<std::pair<std::string, int>>{{"g2-so0-7-so8p", 0}, {"su3-su4-spin7", 0}}) {
    const Verdict v = certify_bracket_intersection(dec_of(id, p));
    EXPECT_EQ(v.kind, VerdictKind::CertifiedBracketIntersection) << id;
    EXPECT_GE(v.data.at("epsilon"), 1e-4) << id;
  }
}

TEST(CertifyBracket, WitnessTripleIsNotCertified) {
  const Verdict v = certify_bracket_intersection(dec_of("spin-octonion-case2", 1));
  EXPECT_NE(v.kind, VerdictKind::CertifiedBracketIntersection);
}

TEST(CertifyBracket, EpsilonIsALowerBoundForRho) {
  std::mt19937_64 rng(43);
  for (auto [id, p] : std::vector<std::pair<std::string, int>>{
           {"spin7-so8-so9p", 0}, {"g2-so0-7-so8p", 1}, {"su3-su4-spin7", 0}, {"sp2-su4-su5", 0}}) {
    const Decomposition& d = dec_of(id, p);
    const double eps = certify_bracket_intersection(d).data.at("epsilon");
    const Subspace dom = sum(d.m_eff(), d.s);
    for (int t = 0; t < 200; ++t) {
      const Element x = test::random_in(dom, rng), y = test::random_in(dom, rng);
      EXPECT_GE(rho(d, x, y), eps * (1 - 1e-9)) << id;
    }
  }
}

TEST(CertifyCurvature, SphereSeries) {
  const Verdict v = certify_positive_curvature(dec_of("sp-series", 1), 16, true);
  EXPECT_EQ(v.kind, VerdictKind::CertifiedCurvatureBound);
  EXPECT_GT(v.data.at("epsilon"), 0.0);
}

TEST(CertifyCurvature, VacuousWhenMIsSmall) {
  Triple t = build("sp-rank4", 1);
  t.h = t.k;
  const Verdict v = certify_positive_curvature(decompose(t), 4, true);
  EXPECT_EQ(v.kind, VerdictKind::CertifiedCurvatureBound);
  EXPECT_EQ(v.data.at("vacuous"), 1.0);
}

TEST(CertifyCurvature, WitnessTripleDescendsToZero) {
  const Verdict v = certify_positive_curvature(dec_of("spin-octonion-case1", 0), 8, true);
  EXPECT_EQ(v.kind, VerdictKind::Inconclusive);
}

TEST(CertifyCurvature, RequiresFlag) {
  EXPECT_THROW(certify_positive_curvature(dec_of("sp-series", 1), 4, false), PreconditionError);
}

TEST(Estimate, WitnessFamiliesGoToZero) {
  EstimateOptions o;
  o.restarts = 8;
  EXPECT_LT(estimate_inf_rho(dec_of("spin-octonion-case1", 0), o).data.at("rho_inf"), 1e-3);
  EXPECT_LT(estimate_inf_rho(dec_of("g2-su2-diagonal", 0), o).data.at("rho_inf"), 1e-3);
}

TEST(Estimate, BoundedBelowByCurvatureEpsilon) {
  const Decomposition& d = dec_of("sp-rank4", 1);
  const double eps = certify_positive_curvature(d, 16, true).data.at("epsilon");
  EstimateOptions o;
  o.restarts = 16;
  EXPECT_GE(estimate_inf_rho(d, o).data.at("rho_inf"), eps * (1 - 1e-6));
}

TEST(Estimate, MoreRestartsNeverWorse) {
  const Decomposition& d = dec_of("su3-su4-spin7", 0);
  double prev = std::numeric_limits<double>::infinity();
  for (int r : {1, 2, 4, 8}) {
    EstimateOptions o;
    o.restarts = r;
    const double v = estimate_inf_rho(d, o).data.at("rho_inf");
    EXPECT_LE(v, prev + 1e-12);
    prev = v;
  }
}

TEST(Estimate, DeterministicForFixedSeed) {
  const Decomposition& d = dec_of("sp2-su4-su5", 0);
  EstimateOptions o;
  o.restarts = 4;
  o.seed = 99;
  const Verdict a = estimate_inf_rho(d, o), b = estimate_inf_rho(d, o);
  EXPECT_EQ(a.data.at("rho_inf"), b.data.at("rho_inf"));
  EXPECT_EQ(a.evaluations, b.evaluations);
  EXPECT_EQ(a.x.matrix(), b.x.matrix());
}

TEST(Estimate, ArgminIsConsistent) {
  const Decomposition& d = dec_of("su3-su4-spin7", 0);
  const Verdict v = estimate_inf_rho(d);
  EXPECT_NEAR(rho(d, v.x, v.y), v.data.at("rho_inf"), 1e-8);
}

TEST(Witness, AllFamiliesVerifyInRange) {
  for (const std::string& fam : witness_families()) {
    const auto [lo, hi] = witness_range(fam);
    const int top = hi < 0 ? lo + 2 : hi;
    for (int p = lo; p <= top; ++p) {
      const Witness w = builtin_witness(fam, p);
      const Decomposition d = decompose(w.triple);
      const Verdict v = verify_witness(d, w.x, w.y);
      EXPECT_EQ(v.kind, VerdictKind::ViolationWitness) << fam << " p=" << p << ": " << v.reason;
      EXPECT_LT(test::commutator(w.x.matrix(), w.y.matrix()).norm(), 1e-10 * v.data.at("scale"));
      EXPECT_GE(v.data.at("wedge"), 0.1 * std::pow(v.data.at("scale"), 2));
    }
  }
}

TEST(Witness, WitnessesSurviveConjugation) {
  std::mt19937_64 rng(44);
  const Witness w = builtin_witness("su3-long-root", 1);
  const Matrix g = test::random_orthogonal(w.triple.ambient_dim(), rng);
  const Decomposition d = decompose(conjugate(w.triple, g));
  EXPECT_EQ(verify_witness(d, conjugate(w.x, g), conjugate(w.y, g)).kind, VerdictKind::ViolationWitness);
}

TEST(Witness, RangeChecks) {
  EXPECT_THROW(builtin_witness("spin-octonion-case4", 2), PreconditionError);
  EXPECT_THROW(builtin_witness("su3-su4-spin7", 0), PreconditionError);
  EXPECT_THROW(builtin_witness("f4-case", 0), UnrealizableFamily);
}

TEST(Witness, NonCommutingPairIsInconclusive) {
  const Decomposition& d = dec_of("su3-su4-spin7", 0);
  const Verdict v = verify_witness(d, d.m1.element(0), d.m1.element(1));
  EXPECT_EQ(v.kind, VerdictKind::Inconclusive);
}

TEST(Sequence, ClosedFormBehaviour) {
  const G2SequenceContext& c = g2_sequence_context();
  EXPECT_NE(c.lambda, 0.0);
  const Decomposition& d = dec_of("g2-su2-diagonal", 0);
  double w0 = -1;
  for (int n : {1, 2, 4, 8, 16}) {
    const auto [x, y] = g2_sequence(n);
    const auto [x2, y2] = g2_sequence(2 * n);
    EXPECT_NEAR(norm(bracket(x2, y2)) / norm(bracket(x, y)), 0.5, 1e-6);
    const Element closed = (2.0 / (c.lambda * n)) * bracket(c.e_minus, c.e2);
    EXPECT_LT(test::dist(bracket(x, y), closed), 1e-9);
    const double w = wedge_norm(d.m.project(x), d.m.project(y));
    if (w0 < 0) w0 = w;
    EXPECT_NEAR(w, w0, 1e-10);
  }
  EXPECT_NEAR(w0, wedge_norm(d.m.project(c.e0), d.m.project(c.e_minus)), 1e-10);
}

TEST(Sequence, Verdict) {
  const Verdict v = g2_sequence_verdict({1, 2, 4, 8, 16});
  EXPECT_EQ(v.kind, VerdictKind::SequenceViolation);
  EXPECT_EQ(v.samples.size(), 5u);
  EXPECT_THROW(g2_sequence(0), PreconditionError);
}
