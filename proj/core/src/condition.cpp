#include "collar/condition.hpp"

#include "collar/algebras.hpp"
#include "collar/octonion.hpp"
#include "collar/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace collar {

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::CertifiedBracketIntersection: return "CertifiedBracketIntersection";
    case VerdictKind::CertifiedCurvatureBound: return "CertifiedCurvatureBound";
    case VerdictKind::ViolationWitness: return "ViolationWitness";
    case VerdictKind::SequenceViolation: return "SequenceViolation";
    case VerdictKind::NumericalEstimate: return "NumericalEstimate";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

/// Coordinates on a subspace through its flat orthonormal basis.
struct Chart {
  int n;
  const Matrix* basis;

  int dim() const { return static_cast<int>(basis->cols()); }
  Element element(const Eigen::Ref<const Vector>& c) const {
    return Element::trusted(Eigen::Map<const Matrix>(Vector(*basis * c).data(), n, n));
  }
  Vector coords(const Element& x) const { return basis->transpose() * x.flat(); }
};

Matrix stacked(const Subspace& a, const Subspace& b) {
  Matrix out(a.flat_basis().rows(), a.dim() + b.dim());
  out << a.flat_basis(), b.flat_basis();
  return out;
}

struct WedgeSq {
  double value;
  Vector grad_a, grad_b;
};

/// |a∧b|² in orthonormal coordinates, with gradients.
WedgeSq wedge_sq(const Vector& a, const Vector& b) {
  const double aa = a.squaredNorm(), bb = b.squaredNorm(), ab = a.dot(b);
  return {aa * bb - ab * ab, 2.0 * bb * a - 2.0 * ab * b, 2.0 * aa * b - 2.0 * ab * a};
}

constexpr double kTinyWedge = 1e-300;

/// ‖[X,Y]‖²/|X_u ∧ Y_u|² over pairs in (u ⊕ v)², u the leading block of the chart.
Objective pair_ratio(const Chart& chart, int u_dim) {
  return [chart, u_dim](const Vector& z, Vector* grad) {
    const int d = chart.dim();
    const Vector xc = z.head(d), yc = z.tail(d);
    const Element x = chart.element(xc), y = chart.element(yc);
    const Element b = bracket(x, y);
    const double num = inner(b, b);
    const WedgeSq w = wedge_sq(xc.head(u_dim), yc.head(u_dim));
    const double den = std::max(w.value, kTinyWedge);
    if (grad) {
      grad->resize(2 * d);
      Vector gx = 2.0 * chart.coords(bracket(y, b));
      Vector gy = -2.0 * chart.coords(bracket(x, b));
      gx *= 1.0 / den;
      gy *= 1.0 / den;
      const double s = num / (den * den);
      gx.head(u_dim) -= s * w.grad_a;
      gy.head(u_dim) -= s * w.grad_b;
      grad->head(d) = gx;
      grad->tail(d) = gy;
    }
    return num / den;
  };
}

/// ‖[a,b] + P_k[c,d]‖²/|a∧b|² with a,b ∈ m and c,d ∈ s.
Objective set_level_ratio(const Chart& m, const Chart& s, const Subspace& k) {
  return [m, s, &k](const Vector& z, Vector* grad) {
    const int dm = m.dim(), ds = s.dim();
    const Vector a = z.segment(0, dm), b = z.segment(dm, dm);
    const Vector c = z.segment(2 * dm, ds), d = z.segment(2 * dm + ds, ds);
    const Element ea = m.element(a), eb = m.element(b), ec = s.element(c), ed = s.element(d);
    const Element B = bracket(ea, eb) + k.project(bracket(ec, ed));
    const double num = inner(B, B);
    const WedgeSq w = wedge_sq(a, b);
    const double den = std::max(w.value, kTinyWedge);
    if (grad) {
      grad->resize(z.size());
      const double q = num / (den * den);
      grad->segment(0, dm) = 2.0 * m.coords(bracket(eb, B)) / den - q * w.grad_a;
      grad->segment(dm, dm) = -2.0 * m.coords(bracket(ea, B)) / den - q * w.grad_b;
      grad->segment(2 * dm, ds) = 2.0 * s.coords(bracket(ed, B)) / den;
      grad->segment(2 * dm + ds, ds) = -2.0 * s.coords(bracket(ec, B)) / den;
    }
    return num / den;
  };
}

/// ‖[X,Y]‖²/|X∧Y|² over pairs in one subspace.
Objective curvature_ratio(const Chart& p) { return pair_ratio(p, p.dim()); }

double safe_sqrt(double v) { return std::sqrt(std::max(v, 0.0)); }

}  // namespace

double rho(const Decomposition& dec, const Element& x, const Element& y, bool restrict_to_m1) {
  const Subspace& u = restrict_to_m1 ? dec.m_eff() : dec.m;
  const Subspace domain = sum(u, dec.s);
  const double scale = std::max({norm(x), norm(y), 1e-300});
  const double res = std::max(domain.residual(x), domain.residual(y));
  if (res > 1e-8 * scale)
    throw PreconditionError("rho: argument leaves the pair domain (residual " + std::to_string(res) + ")");
  const double w = wedge_norm(u.project(x), u.project(y));
  if (w <= 1e-12 * scale * scale) throw PreconditionError("rho: m-parts are linearly dependent");
  return norm(bracket(x, y)) / w;
}

Verdict certify_bracket_intersection(const Decomposition& dec, double tol, const Thresholds& th, int restarts,
                                     std::uint64_t seed) {
  Verdict v;
  const Subspace ss = bracket_span(dec.s, dec.s, tol);
  const Subspace mm = bracket_span(dec.m, dec.m, tol);
  const Subspace both = intersect(ss, mm, tol);
  v.data["dim_bracket_ss"] = ss.dim();
  v.data["dim_bracket_mm"] = mm.dim();
  v.data["dim_intersection"] = both.dim();
  if (both.empty()) {
    v.kind = VerdictKind::CertifiedBracketIntersection;
    v.method = "span-intersection";
    v.reason = "[s,s] and [m,m] meet only in 0";
    return v;
  }
  if (dec.m.dim() < 2) {
    v.kind = VerdictKind::CertifiedBracketIntersection;
    v.method = "span-intersection";
    v.reason = "dim m < 2, no independent m-parts";
    return v;
  }
  const Chart m{dec.ambient_dim(), &dec.m.flat_basis()};
  const Chart s{dec.ambient_dim(), &dec.s.flat_basis()};
  MinimizeOptions opts;
  opts.restarts = restarts;
  opts.seed = seed;
  const MinimizeResult r = multistart_minimize(set_level_ratio(m, s, dec.triple.k), 2 * (m.dim() + s.dim()), opts);
  const double eps = safe_sqrt(r.value);
  v.data["epsilon"] = eps;
  v.method = "set-level";
  v.restarts_used = r.restarts_used;
  v.evaluations = r.evaluations;
  v.converged = r.converged;
  const int dm = m.dim();
  v.x = m.element(r.argmin.segment(0, dm));
  v.y = m.element(r.argmin.segment(dm, dm));
  if (eps >= th.certify_floor) {
    v.kind = VerdictKind::CertifiedBracketIntersection;
    v.reason = "[s,s] meets [m,m], but the k-part of [X,Y] is bounded below by epsilon |X_m ^ Y_m|";
  } else {
    v.kind = VerdictKind::Inconclusive;
    v.reason = "[s,s] meets [m,m] and the set-level bound falls below the certification floor";
  }
  return v;
}

Verdict certify_positive_curvature(const Decomposition& dec, int samples, bool sphere_flag, const Thresholds& th,
                                   std::uint64_t seed) {
  if (!sphere_flag)
    throw PreconditionError("certify_positive_curvature: entry is not flagged as a positively curved sphere");
  Verdict v;
  v.method = "curvature";
  if (dec.m.dim() < 2) {
    v.kind = VerdictKind::CertifiedCurvatureBound;
    v.reason = "dim m < 2, no independent m-parts";
    v.data["vacuous"] = 1.0;
    return v;
  }
  const Chart p{dec.ambient_dim(), &dec.p.flat_basis()};
  MinimizeOptions opts;
  opts.restarts = samples;
  opts.seed = seed;
  const MinimizeResult r = multistart_minimize(curvature_ratio(p), 2 * p.dim(), opts);
  const double eps = safe_sqrt(r.value);
  v.data["epsilon"] = eps;
  v.restarts_used = r.restarts_used;
  v.evaluations = r.evaluations;
  v.converged = r.converged;
  v.x = p.element(r.argmin.head(p.dim()));
  v.y = p.element(r.argmin.tail(p.dim()));
  if (eps >= th.certify_floor) {
    v.kind = VerdictKind::CertifiedCurvatureBound;
    v.reason = "|[X,Y]| >= epsilon |X ^ Y| >= epsilon |X_m ^ Y_m| on p";
  } else {
    v.kind = VerdictKind::Inconclusive;
    v.reason = "sampled curvature bound falls below the certification floor";
  }
  return v;
}

Verdict estimate_inf_rho(const Decomposition& dec, const EstimateOptions& o) {
  const Subspace& u = dec.m_eff();
  Verdict v;
  v.kind = VerdictKind::NumericalEstimate;
  v.method = dec.m1.empty() ? "lbfgs on m+s" : "lbfgs on m1+s";
  if (u.dim() < 2) {
    v.kind = VerdictKind::Inconclusive;
    v.reason = "dim m1 < 2, rho is undefined";
    return v;
  }
  const Matrix basis = stacked(u, dec.s);
  const Chart chart{dec.ambient_dim(), &basis};
  MinimizeOptions opts;
  opts.restarts = o.restarts;
  opts.iters = o.iters;
  opts.seed = o.seed;
  opts.target = o.stop_below > 0 ? o.stop_below * o.stop_below : -1.0;
  const MinimizeResult r = multistart_minimize(pair_ratio(chart, u.dim()), 2 * chart.dim(), opts);
  const double rho_inf = safe_sqrt(r.value);
  v.data["rho_inf"] = rho_inf;
  if (rho_inf > 0) v.data["empirical_C"] = 1.0 / rho_inf;
  v.restarts_used = r.restarts_used;
  v.evaluations = r.evaluations;
  v.converged = r.converged;
  const Element x = chart.element(r.argmin.head(chart.dim()));
  const Element y = chart.element(r.argmin.tail(chart.dim()));
  const double scale = std::max(norm(x), norm(y));
  v.x = scale > 0 ? (1.0 / scale) * x : x;
  v.y = scale > 0 ? (1.0 / scale) * y : y;
  v.data["argmin_m_wedge"] = wedge_norm(u.project(v.x), u.project(v.y));
  v.reason = r.converged ? "converged" : "iteration budget exhausted";
  return v;
}

Verdict verify_witness(const Decomposition& dec, const Element& x, const Element& y, const Thresholds& th) {
  const Subspace& u = dec.m_eff();
  const Subspace domain = sum(u, dec.s);
  const double scale = std::max(norm(x), norm(y));
  if (scale == 0.0) throw PreconditionError("verify_witness: zero pair");
  const double res = std::max(domain.residual(x), domain.residual(y));
  if (res > 1e-8 * scale)
    throw PreconditionError("verify_witness: pair leaves m1+s, projection residual " + std::to_string(res));
  Verdict v;
  v.method = "exact pair";
  v.x = x;
  v.y = y;
  const double br = norm(bracket(x, y));
  const double w = wedge_norm(u.project(x), u.project(y));
  v.data["bracket_norm"] = br;
  v.data["wedge"] = w;
  v.data["scale"] = scale;
  v.data["membership_residual"] = res;
  if (br <= th.violation * scale && w >= th.wedge_floor * scale * scale) {
    v.kind = VerdictKind::ViolationWitness;
    v.reason = "[X,Y] = 0 with independent m-parts";
  } else {
    v.kind = VerdictKind::Inconclusive;
    v.reason = br > th.violation * scale ? "bracket residual above threshold" : "m-parts nearly dependent";
  }
  return v;
}

// --- built-in witnesses ----------------------------------------------------

namespace {

/// e_b e_aᵀ − e_a e_bᵀ for arbitrary vectors.
Element eab(const Vector& a, const Vector& b) {
  return Element::trusted(b * a.transpose() - a * b.transpose());
}

Vector unit(int n, int i) { return Vector::Unit(n, i); }

Vector pad(const Vector& v, int n) {
  Vector out = Vector::Zero(n);
  out.head(v.size()) = v;
  return out;
}

Element embed8(const Element& x, int n) { return embed(x, n, 0); }

/// The 3×3 pair with a commuting bracket inside su(3).
std::pair<ComplexMatrix, ComplexMatrix> su3_pair() {
  using C = std::complex<double>;
  const C i{0.0, 1.0};
  ComplexMatrix x(3, 3), y(3, 3);
  x << 0, 1, 1, -1, 0, 1, -1, -1, 0;
  y << 0, i, -i, i, 0, i, -i, i, 0;
  return {x, y};
}

ComplexMatrix place(const ComplexMatrix& a, int n, const std::vector<int>& idx) {
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(idx[r], idx[c]) = a(static_cast<int>(r), static_cast<int>(c));
  return out;
}

Element su3_in_sp(const ComplexMatrix& a, int slots) {
  std::vector<Quaternion> entries(static_cast<std::size_t>(slots * slots), Quaternion::Zero());
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      entries[static_cast<std::size_t>(r * slots + c)] = Quaternion(a(r, c).real(), a(r, c).imag(), 0.0, 0.0);
  return Element(quat_matrix(entries, slots));
}

std::pair<Element, Element> octonion_case1(int n) {
  const Element x = eab(unit(n, 0), unit(n, 1)) + eab(unit(n, 2), unit(n, 8));
  const Element y = eab(unit(n, 0), unit(n, 2)) + eab(unit(n, 1), unit(n, 8));
  return {x, y};
}

std::pair<Element, Element> octonion_case2(int n) {
  const Element li = left_mult(Octonion::unit(1));
  const Element rj = right_mult(Octonion::unit(2));
  const Matrix t = -(li.matrix() * rj.matrix());
  const Vector e1 = unit(8, 4);
  const Vector e2 = t * e1;
  Vector e3;
  for (int c = 5; c < 8; ++c) {
    Vector v = unit(8, c) - unit(8, c).dot(e1) * e1 - unit(8, c).dot(e2) * e2;
    if (v.norm() > 0.5) {
      e3 = v.normalized();
      break;
    }
  }
  const Vector e4 = t * e3;
  const double r2 = std::sqrt(2.0);
  const Element x = embed8(li, n) + r2 * (eab(pad(e1, n), unit(n, 8)) + eab(pad(e3, n), unit(n, 9)));
  const Element y = embed8(rj, n) + r2 * (eab(pad(e2, n), unit(n, 8)) + eab(pad(e4, n), unit(n, 9)));
  return {x, y};
}

std::pair<Element, Element> octonion_case4(int n) {
  const Element li = left_mult(Octonion::unit(1));
  const Element lj = left_mult(Octonion::unit(2));
  const Matrix t = -(lj.matrix() * li.matrix());
  std::vector<Vector> odd, basis;
  for (int c = 0; c < 8 && odd.size() < 4; ++c) {
    Vector v = unit(8, c);
    for (const auto& w : basis) v -= v.dot(w) * w;
    if (v.norm() > 0.5) {
      v.normalize();
      odd.push_back(v);
      basis.push_back(v);
      basis.push_back(t * v);
    }
  }
  const double r2 = std::sqrt(2.0);
  Element x = embed8(li, n), y = embed8(lj, n);
  for (int r = 0; r < 4; ++r) {
    x += r2 * eab(pad(t * odd[static_cast<std::size_t>(r)], n), unit(n, 8 + r));
    y += r2 * eab(pad(odd[static_cast<std::size_t>(r)], n), unit(n, 8 + r));
  }
  return {x, y};
}

std::pair<Element, Element> family_pair(const std::string& family, int p) {
  const auto [cx, cy] = su3_pair();
  if (family == "spin-octonion-case1" || family == "spin-octonion-case1-minus") return octonion_case1(9 + p);
  if (family == "spin-octonion-case2") return octonion_case2(9 + p);
  if (family == "spin-octonion-case4") return octonion_case4(9 + p);
  if (family == "su3-long-root") return {su3_in_sp(cx, p + 2), su3_in_sp(cy, p + 2)};
  if (family == "su3-su4-sup4") {
    const int n = p + 4;
    return {Element(complex_to_real(place(cx, n, {2, 3, 4}))), Element(complex_to_real(place(cy, n, {2, 3, 4})))};
  }
  if (family == "su(p+4)-su3-pair") {
    const int n = p + 4;
    const ComplexMatrix x = place(cx, n, {0, 2, 4}) - place(cx.conjugate(), n, {1, 3, 5});
    const ComplexMatrix y = place(cy, n, {0, 2, 4}) - place(cy.conjugate(), n, {1, 3, 5});
    return {Element(complex_to_real(x)), Element(complex_to_real(y))};
  }
  if (family == "su2-long-root-sun") {
    const int n = p + 2;
    return {Element(complex_to_real(place(cx, n, {0, 1, 2}))), Element(complex_to_real(place(cy, n, {0, 1, 2})))};
  }
  if (family == "su2-long-root-sop") {
    const int n = p + 4;
    return {embed(Element(complex_to_real(cx)), n, 0), embed(Element(complex_to_real(cy)), n, 0)};
  }
  if (family == "su2-long-root-g2") return {su3_to_g2(cx), su3_to_g2(cy)};
  throw PreconditionError("unknown witness family: " + family);
}

}  // namespace

std::vector<std::string> witness_families() {
  std::vector<std::string> out;
  for (const auto& e : catalog())
    if (!e.witness_family.empty()) out.push_back(e.witness_family);
  return out;
}

std::pair<int, int> witness_range(const std::string& family) {
  const auto& e = find_entry(family);
  if (e.witness_family.empty()) {
    if (!e.realizable && e.expected != ExpectedKind::Metadata)
      throw UnrealizableFamily(e.id + " needs an exceptional ambient algebra (" + e.description + "); out of scope");
    throw PreconditionError(e.id + " carries no built-in witness");
  }
  return {e.p_min, e.p_max};
}

Witness builtin_witness(const std::string& family, int p) {
  const auto [lo, hi] = witness_range(family);
  if (p < lo || (hi >= 0 && p > hi))
    throw PreconditionError("p=" + std::to_string(p) + " outside the witness range of " + family);
  const auto& e = find_entry(family);
  Witness w;
  w.triple = build(e.id, p);
  w.family = e.id;
  w.p = p;
  std::tie(w.x, w.y) = family_pair(e.id, p);
  return w;
}

// --- the G2 sequence -------------------------------------------------------

const G2SequenceContext& g2_sequence_context() {
  static const G2SequenceContext ctx = [] {
    const auto& f = g2_octonion_frame();
    const int n = 14;
    G2SequenceContext c;
    c.triple = build("g2-su2-diagonal", 0);
    c.e0 = embed(f.e0, n, 0);
    c.e_minus = embed(f.e_minus, n, 0);
    c.s = embed(f.s_i, n, 0) - embed(f.s_i, n, 7);
    c.e1 = embed(f.e1, n, 0);
    c.e2 = embed(f.e2, n, 0);
    c.lambda = f.lambda;
    return c;
  }();
  return ctx;
}

std::pair<Element, Element> g2_sequence(int n) {
  if (n <= 0) throw PreconditionError("g2_sequence: n must be positive");
  const auto& c = g2_sequence_context();
  const double dn = static_cast<double>(n);
  Element x = c.e0 - 3.0 * c.s - (2.0 / (c.lambda * dn)) * c.e2;
  Element y = c.e_minus + dn * c.e1;
  return {x, y};
}

Verdict g2_sequence_verdict(const std::vector<int>& ns) {
  if (ns.empty()) throw PreconditionError("g2_sequence_verdict: no sample indices");
  const auto& c = g2_sequence_context();
  const Decomposition dec = decompose(c.triple, kDefaultTol, DecomposeOptions{false, false, 0, 0});
  Verdict v;
  v.method = "explicit sequence";
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0, wlo = lo, whi = 0.0;
  for (int n : ns) {
    const auto [x, y] = g2_sequence(n);
    SequenceSample s;
    s.n = n;
    s.bracket_norm = norm(bracket(x, y));
    s.wedge = wedge_norm(dec.m.project(x), dec.m.project(y));
    v.samples.push_back(s);
    lo = std::min(lo, s.bracket_norm * n);
    hi = std::max(hi, s.bracket_norm * n);
    wlo = std::min(wlo, s.wedge);
    whi = std::max(whi, s.wedge);
  }
  const double drift = hi > 0 ? (hi - lo) / hi : 0.0;
  v.data["lambda"] = c.lambda;
  v.data["bracket_times_n"] = hi;
  v.data["bracket_times_n_drift"] = drift;
  v.data["wedge"] = whi;
  v.data["wedge_drift"] = whi - wlo;
  if (hi > 0 && drift <= 1e-6 && whi - wlo <= 1e-10 && wlo > 0) {
    v.kind = VerdictKind::SequenceViolation;
    v.reason = "|[X_n,Y_n]| decays like 1/n while |(X_n)_m ^ (Y_n)_m| stays constant";
  } else {
    v.kind = VerdictKind::Inconclusive;
    v.reason = "sequence does not show the expected decay";
  }
  return v;
}

}  // namespace collar
