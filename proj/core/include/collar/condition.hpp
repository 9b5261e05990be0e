#pragma once

#include "collar/catalog.hpp"
#include "collar/triple.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace collar {

enum class VerdictKind {
  CertifiedBracketIntersection,
  CertifiedCurvatureBound,
  ViolationWitness,
  SequenceViolation,
  NumericalEstimate,
  Inconclusive,
};
const char* to_string(VerdictKind k);

struct Thresholds {
  double violation = 1e-10;   ///< ‖[X,Y]‖ ≤ violation·scale
  double wedge_floor = 0.1;   ///< |X_m∧Y_m| ≥ wedge_floor·scale²
  double certify_floor = 1e-4;
};

struct SequenceSample {
  int n = 0;
  double bracket_norm = 0.0;
  double wedge = 0.0;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::string reason;
  /// Named scalar evidence (epsilon, rho_inf, residuals, ...), ordered for stable output.
  std::map<std::string, double> data;
  std::string method;
  Element x, y;
  std::vector<SequenceSample> samples;
  int restarts_used = 0;
  long evaluations = 0;
  bool converged = true;
};

/// ‖[X,Y]‖ / |X_m ∧ Y_m| with X_m the projection onto m₁ (or m).
double rho(const Decomposition& dec, const Element& x, const Element& y, bool restrict_to_m1 = true);

/// Exact span test, then the k-projected set-level bound when the spans meet.
Verdict certify_bracket_intersection(const Decomposition& dec, double tol = kDefaultTol,
                                     const Thresholds& th = {}, int restarts = 24, std::uint64_t seed = 0);

/// Minimum of ‖[X,Y]‖/|X∧Y| over p; `sphere_flag` asserts a positively curved normal homogeneous sphere.
Verdict certify_positive_curvature(const Decomposition& dec, int samples, bool sphere_flag,
                                   const Thresholds& th = {}, std::uint64_t seed = 0);

struct EstimateOptions {
  int restarts = 16;
  int iters = 500;
  std::uint64_t seed = 0;
  /// Stop once ρ falls below this (≤ 0 disables).
  double stop_below = -1.0;
};
Verdict estimate_inf_rho(const Decomposition& dec, const EstimateOptions& opts = {});

Verdict verify_witness(const Decomposition& dec, const Element& x, const Element& y, const Thresholds& th = {});

struct Witness {
  Triple triple;
  Element x, y;
  std::string family;
  int p = 0;
};

std::vector<std::string> witness_families();
/// Valid p range [lo, hi] for a witness family (hi < 0: unbounded).
std::pair<int, int> witness_range(const std::string& family);
Witness builtin_witness(const std::string& family, int p);

/// The ambient and frame elements behind g2_sequence.
struct G2SequenceContext {
  Triple triple;
  Element e0, e_minus, s, e1, e2;
  double lambda = 0.0;
};
const G2SequenceContext& g2_sequence_context();
std::pair<Element, Element> g2_sequence(int n);
Verdict g2_sequence_verdict(const std::vector<int>& ns);

}  // namespace collar
