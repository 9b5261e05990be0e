#pragma once

#include "collar/triple.hpp"

#include <array>

namespace collar {

/// φ = Id on s and (1−h)⁻¹ Id on m₁; ψ = Id − φ⁻¹ = h·P_{m₁}.
class PhiMap {
public:
  PhiMap(const Decomposition& dec, double h);

  double h() const { return h_; }
  const Decomposition& dec() const { return *dec_; }
  Element psi(const Element& x) const;
  double psi_norm() const;

private:
  const Decomposition* dec_;
  double h_;
};

struct CurvatureTerms {
  double alpha = 0, beta = 0, gamma = 0, delta = 0;
  /// From the ψ definitions.
  Element A, B, C;
  /// From the closed forms in X_m, X_s, Y_m, Y_s.
  Element A_closed, B_closed, C_closed;
  double dual_defect = 0;
  double N1 = 0, N2 = 0;

  /// α + β + γ + δ, the computable upper bound for the unnormalized curvature.
  double curvature_upper_surrogate() const { return alpha + beta + gamma + delta; }
};

CurvatureTerms tensors(const PhiMap& phi, const Element& x, const Element& y);

/// Coefficients in ascending powers of x.
struct LambdaPolys {
  std::array<double, 4> p1{}, p2{}, p3{};

  static double eval(const std::array<double, 4>& c, double x) { return c[0] + x * (c[1] + x * (c[2] + x * c[3])); }
};
LambdaPolys lambda_polys(double lam);

/// Norm of [ , ]: Λ²m₁ → k.
double bracket_operator_norm(const Decomposition& dec);

struct LemmaCheck {
  double surrogate = 0, bound = 0, lambda = 0;
  bool holds = false;
};
LemmaCheck lemma_check(const PhiMap& phi, const Element& x, const Element& y, double lam);
bool check_lemma_bound(const PhiMap& phi, const Element& x, const Element& y);

/// ½·h′·Q(X_m, Y_m).
double second_fundamental_form(const Decomposition& dec, double hprime, const Element& x, const Element& y);

}  // namespace collar
