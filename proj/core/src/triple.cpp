#include "collar/triple.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <limits>
#include <cmath>
#include <random>
#include <stdexcept>

namespace collar {

const char* to_string(PhiClass c) {
  switch (c) {
    case PhiClass::Phi1: return "Phi1";
    case PhiClass::Phi2: return "Phi2";
    case PhiClass::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

void validate(const Triple& t, double tol) {
  require_same_ambient(t.g.ambient_dim(), t.k.ambient_dim());
  require_same_ambient(t.g.ambient_dim(), t.h.ambient_dim());
  if (closure_residual(t.g) > tol) throw PreconditionError("g is not bracket-closed");
  if (closure_residual(t.k) > tol) throw PreconditionError("k is not bracket-closed");
  if (closure_residual(t.h) > tol) throw PreconditionError("h is not bracket-closed");
  if (inclusion_residual(t.k, t.g) > tol) throw PreconditionError("k is not contained in g");
  if (inclusion_residual(t.h, t.k) > tol) throw PreconditionError("h is not contained in k");
}

Subspace ideal_closure(const Subspace& gens, const Subspace& k, double tol) {
  Subspace u = gens;
  if (u.empty()) return u;
  for (int round = 0; round <= k.dim() + 1; ++round) {
    Subspace next = sum(u, bracket_span(k, u, tol), tol);
    if (next.dim() == u.dim()) return next;
    u = std::move(next);
  }
  throw std::logic_error("ideal closure did not stabilize");
}

Subspace generated_subalgebra(const Subspace& gens, double tol) {
  Subspace u = gens;
  if (u.empty()) return u;
  const int cap = u.ambient_dim() * (u.ambient_dim() - 1) / 2 + 1;
  for (int round = 0; round <= cap; ++round) {
    Subspace next = sum(u, bracket_span(u, u, tol), tol);
    if (next.dim() == u.dim()) return next;
    u = std::move(next);
  }
  throw std::logic_error("subalgebra closure did not stabilize");
}

namespace {

struct Split {
  std::vector<Matrix> parts;  // coordinates in the split space, orthonormal columns
  std::vector<bool> reducible;
};

/// Orthonormal basis of the symmetric l-equivariant operators on Rᵈ, as d×d matrices.
std::vector<Matrix> equivariant_symmetric(const std::vector<Matrix>& acting, int d) {
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) idx.emplace_back(i, j);
  if (acting.empty()) {
    std::vector<Matrix> out;
    for (auto [i, j] : idx) {
      Matrix s = Matrix::Zero(d, d);
      s(i, j) = s(j, i) = (i == j) ? 1.0 : std::sqrt(0.5);
      out.push_back(s);
    }
    return out;
  }
  // Ω = Σ_a (I⊗A + A⊗I)², whose kernel on Sym(d) is the commutant
  const Eigen::Index d2 = static_cast<Eigen::Index>(d) * d;
  Matrix c = Matrix::Zero(d, d);
  Matrix omega = Matrix::Zero(d2, d2);
  for (const auto& a : acting) {
    c += a * a;
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        omega.block(static_cast<Eigen::Index>(p) * d, static_cast<Eigen::Index>(q) * d, d, d) += 2.0 * apq * a;
      }
  }
  for (int p = 0; p < d; ++p) {
    omega.block(static_cast<Eigen::Index>(p) * d, static_cast<Eigen::Index>(p) * d, d, d) += c;
    for (int q = 0; q < d; ++q)
      omega.block(static_cast<Eigen::Index>(p) * d, static_cast<Eigen::Index>(q) * d, d, d).diagonal().array() +=
          c(p, q);
  }
  const Eigen::Index ns = static_cast<Eigen::Index>(idx.size());
  auto flat = [d](int i, int j) { return static_cast<Eigen::Index>(j) * d + i; };
  auto entries = [&](std::size_t a) {
    const auto [i, j] = idx[a];
    std::vector<std::pair<Eigen::Index, double>> e;
    if (i == j) e.emplace_back(flat(i, i), 1.0);
    else {
      e.emplace_back(flat(i, j), std::sqrt(0.5));
      e.emplace_back(flat(j, i), std::sqrt(0.5));
    }
    return e;
  };
  Matrix sym(ns, ns);
  for (Eigen::Index a = 0; a < ns; ++a) {
    const auto ea = entries(static_cast<std::size_t>(a));
    for (Eigen::Index b = a; b < ns; ++b) {
      double v = 0.0;
      for (const auto& [ra, wa] : ea)
        for (const auto& [rb, wb] : entries(static_cast<std::size_t>(b))) v += wa * wb * omega(ra, rb);
      sym(a, b) = sym(b, a) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  const double scale = std::max(es.eigenvalues().cwiseAbs().maxCoeff(), 1e-300);
  std::vector<Matrix> out;
  for (Eigen::Index k = 0; k < ns; ++k) {
    if (std::abs(es.eigenvalues()(k)) > 1e-9 * scale) continue;
    Matrix s = Matrix::Zero(d, d);
    for (Eigen::Index a = 0; a < ns; ++a) {
      const auto [i, j] = idx[static_cast<std::size_t>(a)];
      const double w = es.eigenvectors()(a, k) * (i == j ? 1.0 : std::sqrt(0.5));
      s(i, j) += w;
      if (i != j) s(j, i) += w;
    }
    out.push_back(s);
  }
  return out;
}

std::vector<Matrix> restrict_action(const std::vector<Matrix>& acting, const Matrix& basis) {
  std::vector<Matrix> out;
  out.reserve(acting.size());
  for (const auto& a : acting) out.push_back(basis.transpose() * a * basis);
  return out;
}

Split invariant_split(const std::vector<Matrix>& acting, int d, std::uint64_t seed) {
  Split best;
  if (d == 0) return best;
  const auto commutant = equivariant_symmetric(acting, d);
  if (commutant.size() <= 1) {
    best.parts.push_back(Matrix::Identity(d, d));
    best.reducible.push_back(false);
    return best;
  }
  constexpr int kAttempts = 6;
  std::size_t best_bad = static_cast<std::size_t>(-1);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt), 0x15u};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    Matrix s = Matrix::Zero(d, d);
    for (const auto& b : commutant) s += normal(rng) * b;
    Eigen::SelfAdjointEigenSolver<Matrix> es(s);
    const Vector& ev = es.eigenvalues();
    const double spread = std::max(ev(d - 1) - ev(0), 1e-300);
    Split split;
    int start = 0;
    for (int i = 1; i <= d; ++i) {
      if (i == d || ev(i) - ev(i - 1) > 1e-7 * spread) {
        split.parts.push_back(es.eigenvectors().middleCols(start, i - start));
        start = i;
      }
    }
    std::size_t bad = 0;
    for (const auto& part : split.parts) {
      const bool red = equivariant_symmetric(restrict_action(acting, part), static_cast<int>(part.cols())).size() > 1;
      split.reducible.push_back(red);
      bad += red;
    }
    if (bad < best_bad) {
      best = std::move(split);
      best_bad = bad;
    }
    if (bad == 0) break;
  }
  return best;
}

std::vector<Matrix> action_on(const Subspace& acting, const Subspace& on) {
  std::vector<Matrix> out;
  for (const auto& x : acting.elements()) out.push_back(ad_matrix(x, on));
  return out;
}

Subspace from_coords(const Subspace& on, const Matrix& coords) {
  return Subspace::from_orthonormal(on.ambient_dim(), on.flat_basis() * coords);
}

Subspace stored_h1(const Triple& t, const Subspace& k0, const Subspace& h0, const Subspace& m, double tol) {
  if (t.h1_override) return *t.h1_override;
  const Split split = invariant_split(action_on(h0, m), m.dim(), 0);
  for (const auto& part : split.parts) {
    if (part.cols() != 7) continue;
    Subspace cand = sum(h0, from_coords(m, part), tol);
    if (closure_residual(cand) <= 1e-8 && inclusion_residual(cand, k0) <= 1e-8) return cand;
  }
  throw std::logic_error("no so(8) between spin(7) and so(9) found");
}

}  // namespace

std::vector<Component> isotypic_split(const Decomposition& dec, std::uint64_t seed) {
  if (dec.l.empty()) throw PreconditionError("isotypic split needs a nontrivial l");
  const Subspace v = complement_in(dec.s, dec.n_l, dec.tol);
  const Split split = invariant_split(action_on(dec.l, v), v.dim(), seed);
  std::vector<Component> out;
  for (std::size_t i = 0; i < split.parts.size(); ++i) {
    Component c;
    c.space = from_coords(v, split.parts[i]);
    c.possibly_reducible = split.reducible[i];
    out.push_back(std::move(c));
  }
  return out;
}

PhiEvidence classify_phi(const Decomposition& dec, const Subspace& v, int restarts, std::uint64_t seed) {
  const Subspace& m1 = dec.m1;
  if (m1.empty()) throw PreconditionError("classify_phi needs m1 != 0");
  PhiEvidence ev;
  ev.restarts = std::max(restarts, 1);
  ev.scale = 1.0;
  const int dm = m1.dim(), dv = v.dim();
  const int n = dec.ambient_dim();
  if (dv == 0) {
    ev.verdict = PhiClass::Phi2;
    ev.min_sigma = std::numeric_limits<double>::infinity();
    return ev;
  }
  const Eigen::Index len = static_cast<Eigen::Index>(n) * n;
  std::vector<Matrix> t(static_cast<std::size_t>(dm), Matrix(len, dv));
  const auto me = m1.elements();
  const auto ve = v.elements();
  for (int a = 0; a < dm; ++a)
    for (int j = 0; j < dv; ++j) t[static_cast<std::size_t>(a)].col(j) = bracket(me[static_cast<std::size_t>(a)], ve[static_cast<std::size_t>(j)]).flat();

  double best = std::numeric_limits<double>::infinity();
  Vector best_x, best_y;
  for (int r = 0; r < ev.restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(r), 0x9fu};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    Vector x(dm), y(dv);
    for (int a = 0; a < dm; ++a) x(a) = normal(rng);
    x.normalize();
    double value = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 400; ++it) {
      Matrix mx = Matrix::Zero(len, dv);
      for (int a = 0; a < dm; ++a) mx += x(a) * t[static_cast<std::size_t>(a)];
      Eigen::SelfAdjointEigenSolver<Matrix> ey(mx.transpose() * mx);
      y = ey.eigenvectors().col(0);
      Matrix wy(len, dm);
      for (int a = 0; a < dm; ++a) wy.col(a) = t[static_cast<std::size_t>(a)] * y;
      Eigen::SelfAdjointEigenSolver<Matrix> ex(wy.transpose() * wy);
      x = ex.eigenvectors().col(0);
      const double next = std::max(ex.eigenvalues()(0), 0.0);
      const bool stalled = value - next <= 1e-14 * std::max(value, 1e-300) || next <= 1e-28;
      value = next;
      if (stalled) break;
    }
    if (value < best) {
      best = value;
      best_x = x;
      best_y = y;
    }
  }
  ev.min_sigma = std::sqrt(best);
  ev.x_m = m1.combine(best_x);
  ev.y_s = v.combine(best_y);
  if (ev.min_sigma <= 1e-6 * ev.scale) ev.verdict = PhiClass::Phi1;
  else if (ev.min_sigma >= 1e-3 * ev.scale) ev.verdict = PhiClass::Phi2;
  else ev.verdict = PhiClass::Inconclusive;
  return ev;
}

Decomposition decompose(const Triple& t, double tol, const DecomposeOptions& opts) {
  validate(t);
  Decomposition d;
  d.triple = t;
  d.tol = tol;
  const int n = t.ambient_dim();
  d.m = complement_in(t.k, t.h, tol);
  d.s = complement_in(t.g, t.k, tol);
  d.p = sum(d.m, d.s, tol);
  d.k0 = d.m.empty() ? Subspace(n) : ideal_closure(d.m, t.k, tol);
  d.h0 = intersect(t.h, d.k0, tol);
  d.hprime = complement_in(t.h, d.k0, tol);
  if (d.k0.dim() == 36 && d.h0.dim() == 21 && d.m.dim() == 15) {
    d.h1 = stored_h1(t, d.k0, d.h0, d.m, tol);
    d.h1_overridden = true;
  } else {
    d.h1 = d.k0.empty() ? Subspace(n) : normalizer(d.h0, d.k0, tol);
  }
  d.m1 = complement_in(d.k0, d.h1, tol);
  d.l = generated_subalgebra(d.m1, tol);
  if (d.l.empty()) {
    d.z_l = t.g;
    d.n_l = t.g;
    d.s_nl = d.s;
    d.s1 = d.s2 = d.s_rest = Subspace(n);
    return d;
  }
  const auto lgens = d.l.elements();
  d.z_l = solve_commutant(lgens, t.g, tol);
  d.n_l = normalizer(d.l, t.g, tol);
  d.s_nl = intersect(d.s, d.n_l, tol);
  d.s1 = d.s2 = d.s_rest = Subspace(n);
  if (!opts.split_s) {
    d.s_rest = complement_in(d.s, d.n_l, tol);
    return d;
  }
  d.components = isotypic_split(d, opts.seed);
  for (auto& c : d.components) {
    if (opts.classify) c.phi = classify_phi(d, c.space, opts.phi_restarts, opts.seed);
    Subspace& into = c.phi.verdict == PhiClass::Phi1   ? d.s1
                     : c.phi.verdict == PhiClass::Phi2 ? d.s2
                                                       : d.s_rest;
    into = sum(into, c.space, tol);
  }
  return d;
}

bool transitivity_check(const Decomposition& dec, const Element& y_s) {
  const double ny = norm(y_s);
  if (ny == 0.0) throw PreconditionError("transitivity check needs a nonzero element");
  const double res = dec.s.residual(y_s);
  if (res > 1e-8 * std::max(1.0, ny))
    throw PreconditionError("element is not in s (projection residual " + std::to_string(res) + ")");
  if (dec.m1.empty()) return true;
  const Subspace nn = solve_commutant({y_s}, dec.k0, dec.tol);
  return projection_image(nn, dec.m1, dec.tol).dim() == dec.m1.dim();
}

bool symmetric_pair_check(const Subspace& g, const Subspace& n0, double tol) {
  if (inclusion_residual(n0, g) > tol) throw PreconditionError("n0 is not contained in g");
  const Subspace s2 = complement_in(g, n0);
  return bracket_residual(n0, n0, n0) <= tol && bracket_residual(n0, s2, s2) <= tol &&
         bracket_residual(s2, s2, n0) <= tol;
}

Triple conjugate(const Triple& t, const Matrix& g) {
  Triple out{t.name, conjugate(t.g, g), conjugate(t.k, g), conjugate(t.h, g), std::nullopt};
  if (t.h1_override) out.h1_override = conjugate(*t.h1_override, g);
  return out;
}

}  // namespace collar
