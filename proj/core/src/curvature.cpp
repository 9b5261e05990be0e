#include "collar/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace collar {

namespace {

void require_pair_domain(const Decomposition& dec, const Element& x, const Element& y) {
  const Subspace& u = dec.m_eff();
  const double scale = std::max({norm(x), norm(y), 1.0});
  for (const Element* e : {&x, &y}) {
    const Element rest = *e - u.project(*e) - dec.s.project(*e);
    if (norm(rest) > 1e-8 * scale)
      throw PreconditionError("curvature: argument leaves m1+s (residual " + std::to_string(norm(rest)) + ")");
  }
}

}  // namespace

PhiMap::PhiMap(const Decomposition& dec, double h) : dec_(&dec), h_(h) {
  if (!(h < 1.0)) throw PreconditionError("PhiMap: h must be below 1 for phi to be positive definite");
}

Element PhiMap::psi(const Element& x) const { return h_ * dec_->m_eff().project(x); }

double PhiMap::psi_norm() const { return dec_->m_eff().empty() ? 0.0 : std::abs(h_); }

CurvatureTerms tensors(const PhiMap& phi, const Element& x, const Element& y) {
  const Decomposition& dec = phi.dec();
  require_pair_domain(dec, x, y);
  const double h = phi.h();
  const Subspace& u = dec.m_eff();

  CurvatureTerms t;
  const Element px = phi.psi(x), py = phi.psi(y);
  t.A = bracket(px, y) + bracket(x, py);
  t.B = bracket(px, py);
  t.C = bracket(px, y) - bracket(x, py);

  const Element xm = u.project(x), ym = u.project(y);
  const Element xs = dec.s.project(x), ys = dec.s.project(y);
  const Element mm = bracket(xm, ym), ms = bracket(xm, ys), sm = bracket(xs, ym);
  t.A_closed = h * (2.0 * mm + ms + sm);
  t.B_closed = (h * h) * mm;
  t.C_closed = h * (ms - sm);
  t.dual_defect = std::max({norm(t.A - t.A_closed), norm(t.B - t.B_closed), norm(t.C - t.C_closed)});

  const Element z = bracket(x, y);
  const Element zh = dec.triple.h.project(z);
  const Element zp = dec.p.project(z);
  const Element zm = dec.m.project(z);
  const Element ah = dec.triple.h.project(t.A);
  const Element pz = phi.psi(z), ppz = phi.psi(pz), pppz = phi.psi(ppz);

  t.N1 = norm(z);
  t.N2 = wedge_norm(xm, ym);
  t.alpha = inner(zh, zh) + 0.25 * inner(zp, zp);
  t.beta = -0.75 * inner(pz, z) - 1.5 * inner(zh, t.A);
  t.gamma = -0.75 * inner(pz, pz) + 1.5 * inner(pz, t.A) - 1.5 * inner(zm, t.B) + 0.75 * inner(ah, ah);
  t.delta = -0.75 * inner(pppz, z) + 1.5 * inner(ppz, t.A) - 1.5 * inner(pz, t.B) - 0.75 * inner(phi.psi(t.A), t.A) -
            0.25 * inner(phi.psi(t.C), t.C) + inner(phi.psi(bracket(px, x)), bracket(py, y)) + inner(t.A, t.B) -
            1.5 * inner(ah, t.B);
  return t;
}

LambdaPolys lambda_polys(double lam) {
  if (lam < 0) throw PreconditionError("lambda_polys: lam must be nonnegative");
  LambdaPolys p;
  p.p1 = {1.0, 0.75, 0.0, 0.75};
  p.p2 = {0.0, 3.0 * lam, 4.5 * lam, 4.5 * lam};
  p.p3 = {3.0 * lam * lam, 8.0 * lam * lam, 0.0, 0.0};
  return p;
}

double bracket_operator_norm(const Decomposition& dec) {
  const Subspace& u = dec.m_eff();
  const int d = u.dim();
  if (d < 2) return 0.0;
  const std::vector<Element> e = u.elements();
  const int n = dec.ambient_dim();
  Matrix map(n * n, d * (d - 1) / 2);
  int col = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) map.col(col++) = bracket(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]).flat();
  return spectral_norm(map);
}

LemmaCheck lemma_check(const PhiMap& phi, const Element& x, const Element& y, double lam) {
  const CurvatureTerms t = tensors(phi, x, y);
  const LambdaPolys p = lambda_polys(lam);
  const double a = phi.psi_norm(), h = phi.h();
  LemmaCheck c;
  c.lambda = lam;
  c.surrogate = t.curvature_upper_surrogate();
  c.bound = LambdaPolys::eval(p.p1, a) * t.N1 * t.N1 + LambdaPolys::eval(p.p2, a) * t.N1 * t.N2 +
            LambdaPolys::eval(p.p3, a) * h * h * t.N2 * t.N2;
  const double scale = std::max({norm(x), norm(y), 1.0});
  c.holds = c.surrogate <= c.bound + 1e-10 * std::pow(scale, 4) * (1.0 + lam * lam);
  return c;
}

bool check_lemma_bound(const PhiMap& phi, const Element& x, const Element& y) {
  return lemma_check(phi, x, y, bracket_operator_norm(phi.dec())).holds;
}

double second_fundamental_form(const Decomposition& dec, double hprime, const Element& x, const Element& y) {
  require_pair_domain(dec, x, y);
  const Subspace& u = dec.m_eff();
  return 0.5 * hprime * inner(u.project(x), u.project(y));
}

}  // namespace collar
