#include "collar/algebras.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <array>
#include <cmath>
#include <limits>
#include <regex>
#include <tuple>

namespace collar {

namespace {

void require_positive(int n) {
  if (n < 1) throw PreconditionError("algebra rank must be at least 1");
}

std::vector<Element> realify_all(const std::vector<ComplexMatrix>& gens) {
  std::vector<Element> out;
  out.reserve(gens.size());
  for (const auto& a : gens) out.push_back(Element(complex_to_real(a)));
  return out;
}

Quaternion qunit(int i) {
  Quaternion q = Quaternion::Zero();
  q(i) = 1.0;
  return q;
}

Matrix orthonormal_columns(const Matrix& a) {
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ() * Matrix::Identity(a.rows(), a.cols());
}

}  // namespace

Element embed(const Element& x, int ambient, int offset) {
  const int n = x.ambient_dim();
  if (offset < 0 || offset + n > ambient) throw PreconditionError("block embedding overflows the ambient");
  Matrix m = Matrix::Zero(ambient, ambient);
  m.block(offset, offset, n, n) = x.matrix();
  return Element::trusted(std::move(m));
}

Subspace embed(const Subspace& u, int ambient, int offset) {
  const int n = u.ambient_dim();
  if (offset < 0 || offset + n > ambient) throw PreconditionError("block embedding overflows the ambient");
  Matrix cols = Matrix::Zero(static_cast<Eigen::Index>(ambient) * ambient, u.dim());
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      cols.row(static_cast<Eigen::Index>(c + offset) * ambient + (r + offset)) =
          u.flat_basis().row(static_cast<Eigen::Index>(c) * n + r);
  return Subspace::from_orthonormal(ambient, std::move(cols));
}

AlgebraRealization embed_block(const AlgebraRealization& inner, int ambient, int offset) {
  return {inner.name, embed(inner.space, ambient, offset),
          inner.meta + "; block at offset " + std::to_string(offset) + " of so(" +
              std::to_string(ambient) + ")"};
}

Subspace so_block(int n, int ambient, int offset) {
  if (offset < 0 || offset + n > ambient) throw PreconditionError("block embedding overflows the ambient");
  std::vector<Element> gens;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) gens.push_back(Element::basis(ambient, offset + r, offset + s));
  if (gens.empty()) return Subspace(ambient);
  return Subspace::span(gens);
}

AlgebraRealization make_so(int n) {
  require_positive(n);
  return {"so(" + std::to_string(n) + ")", so_block(n, n, 0), "span of E_rs"};
}

Matrix complex_to_real(const ComplexMatrix& a) {
  Matrix out(2 * a.rows(), 2 * a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      const double re = a(r, c).real(), im = a(r, c).imag();
      out.block<2, 2>(2 * r, 2 * c) << re, -im, im, re;
    }
  return out;
}

std::vector<ComplexMatrix> su_basis(int n) {
  require_positive(n);
  const std::complex<double> i(0.0, 1.0);
  std::vector<ComplexMatrix> out;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      ComplexMatrix a = ComplexMatrix::Zero(n, n);
      a(r, s) = 1.0;
      a(s, r) = -1.0;
      out.push_back(a);
      a(r, s) = i;
      a(s, r) = i;
      out.push_back(a);
    }
  for (int r = 0; r + 1 < n; ++r) {
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    a(r, r) = i;
    a(r + 1, r + 1) = -i;
    out.push_back(a);
  }
  return out;
}

Element complex_structure(int n) {
  return Element(complex_to_real(std::complex<double>(0.0, 1.0) * ComplexMatrix::Identity(n, n)));
}

AlgebraRealization make_su(int n) {
  require_positive(n);
  if (n == 1) return {"su(1)", Subspace(2), "trivial"};
  return {"su(" + std::to_string(n) + ")", Subspace::span(realify_all(su_basis(n))),
          "complex n×n realified on R^2n"};
}

AlgebraRealization make_u(int n) {
  require_positive(n);
  auto gens = n > 1 ? realify_all(su_basis(n)) : std::vector<Element>{};
  gens.push_back(complex_structure(n));
  return {"u(" + std::to_string(n) + ")", Subspace::span(gens), "complex n×n realified on R^2n"};
}

Matrix quat_left(const Quaternion& q) {
  Matrix m(4, 4);
  for (int c = 0; c < 4; ++c) m.col(c) = quat_mul(q, qunit(c));
  return m;
}

Matrix quat_right(const Quaternion& q) {
  Matrix m(4, 4);
  for (int c = 0; c < 4; ++c) m.col(c) = quat_mul(qunit(c), q);
  return m;
}

Matrix quat_matrix(const std::vector<Quaternion>& entries, int n) {
  if (static_cast<int>(entries.size()) != n * n) throw DimensionMismatch(static_cast<int>(entries.size()), n * n);
  Matrix m(4 * n, 4 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.block(4 * r, 4 * c, 4, 4) = quat_left(entries[static_cast<std::size_t>(r * n + c)]);
  return m;
}

Element quat_right_diag(const Quaternion& q, int n) {
  Matrix m = Matrix::Zero(4 * n, 4 * n);
  for (int r = 0; r < n; ++r) m.block(4 * r, 4 * r, 4, 4) = quat_right(q);
  return Element(m);
}

AlgebraRealization make_sp(int n) {
  require_positive(n);
  std::vector<Element> gens;
  const Quaternion zero = Quaternion::Zero();
  for (int r = 0; r < n; ++r)
    for (int a = 1; a < 4; ++a) {
      std::vector<Quaternion> e(static_cast<std::size_t>(n * n), zero);
      e[static_cast<std::size_t>(r * n + r)] = qunit(a);
      gens.push_back(Element(quat_matrix(e, n)));
    }
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s)
      for (int a = 0; a < 4; ++a) {
        std::vector<Quaternion> e(static_cast<std::size_t>(n * n), zero);
        const Quaternion q = qunit(a);
        e[static_cast<std::size_t>(r * n + s)] = q;
        e[static_cast<std::size_t>(s * n + r)] = -quat_conj(q);
        gens.push_back(Element(quat_matrix(e, n)));
      }
  return {"sp(" + std::to_string(n) + ")", Subspace::span(gens), "quaternionic n×n acting on the left of H^n"};
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_index(int u, int v) {
  for (int i = 0; i < 6; ++i)
    if (kPairs[static_cast<std::size_t>(i)][0] == u && kPairs[static_cast<std::size_t>(i)][1] == v) return i;
  return -1;
}

int permutation_sign(const std::array<int, 4>& l) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (l[static_cast<std::size_t>(i)] == l[static_cast<std::size_t>(j)]) return 0;
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) inv += l[static_cast<std::size_t>(i)] > l[static_cast<std::size_t>(j)];
  return inv % 2 ? -1 : 1;
}

ComplexMatrix lambda2(const ComplexMatrix& a) {
  ComplexMatrix out = ComplexMatrix::Zero(6, 6);
  for (int c = 0; c < 6; ++c) {
    const int p = kPairs[static_cast<std::size_t>(c)][0], q = kPairs[static_cast<std::size_t>(c)][1];
    for (int x = 0; x < 4; ++x) {
      const std::array<std::tuple<int, int, std::complex<double>>, 2> terms{
          {{x, q, a(x, p)}, {p, x, a(x, q)}}};
      for (const auto& [u, v, coef] : terms) {
        if (u == v) continue;
        if (u < v) out(pair_index(u, v), c) += coef;
        else out(pair_index(v, u), c) -= coef;
      }
    }
  }
  return out;
}

}  // namespace

Su4AsSo6::Su4AsSo6() {
  ComplexMatrix hodge = ComplexMatrix::Zero(6, 6);
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      const auto& a = kPairs[static_cast<std::size_t>(p)];
      const auto& b = kPairs[static_cast<std::size_t>(q)];
      hodge(p, q) = permutation_sign({a[0], a[1], b[0], b[1]});
    }
  Matrix conj = Matrix::Zero(12, 12);
  for (int r = 0; r < 6; ++r) {
    conj(2 * r, 2 * r) = 1.0;
    conj(2 * r + 1, 2 * r + 1) = -1.0;
  }
  const Matrix sigma = complex_to_real(hodge) * conj;
  frame_ = orthonormal_columns(null_space(sigma - Matrix::Identity(12, 12)));
  if (frame_.cols() != 6) throw std::logic_error("real form of the exterior square has wrong dimension");
  so6_ = {"su(4)<so(6)", image(su_basis(4)), "su(4) acting on the real form of the exterior square of C^4"};
}

Element Su4AsSo6::operator()(const ComplexMatrix& a) const {
  if (a.rows() != 4 || a.cols() != 4) throw DimensionMismatch(static_cast<int>(a.rows()), 4);
  const Matrix m = frame_.transpose() * complex_to_real(lambda2(a)) * frame_;
  return Element::trusted(0.5 * (m - m.transpose()));
}

Subspace Su4AsSo6::image(const std::vector<ComplexMatrix>& gens) const {
  std::vector<Element> els;
  els.reserve(gens.size());
  for (const auto& a : gens) els.push_back((*this)(a));
  return Subspace::span(els);
}

const Su4AsSo6& su4_as_so6() {
  static const Su4AsSo6 map;
  return map;
}

std::vector<ComplexMatrix> sp2_in_su4_basis() {
  // antilinear J on C⁴ with J e0 = e1, J e2 = e3
  ComplexMatrix omega = ComplexMatrix::Zero(4, 4);
  omega(1, 0) = 1.0;
  omega(0, 1) = -1.0;
  omega(3, 2) = 1.0;
  omega(2, 3) = -1.0;
  Matrix conj = Matrix::Zero(8, 8);
  for (int r = 0; r < 4; ++r) {
    conj(2 * r, 2 * r) = 1.0;
    conj(2 * r + 1, 2 * r + 1) = -1.0;
  }
  const Matrix jr = complex_to_real(omega) * conj;
  const auto basis = su_basis(4);
  Matrix defect(64, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const Matrix x = complex_to_real(basis[a]);
    const Matrix d = x * jr - jr * x;
    defect.col(static_cast<Eigen::Index>(a)) = Eigen::Map<const Vector>(d.data(), d.size());
  }
  const Matrix ker = null_space(defect);
  std::vector<ComplexMatrix> out;
  for (Eigen::Index c = 0; c < ker.cols(); ++c) {
    ComplexMatrix a = ComplexMatrix::Zero(4, 4);
    for (std::size_t b = 0; b < basis.size(); ++b) a += ker(static_cast<Eigen::Index>(b), c) * basis[b];
    out.push_back(a);
  }
  return out;
}

AlgebraRealization spin7_in_so8() {
  return {"spin7+<so(8)", triality_frame().so7_plus, "g2 plus {L_q + 2R_q}: spin representation of spin(7)"};
}

// ---------------------------------------------------------------------------

namespace {

G2Sp2Frame build_sp2_frame() {
  const Quaternion z = Quaternion::Zero(), one = qunit(0), qi = qunit(1), qj = qunit(2), qk = qunit(3);
  const double s3 = std::sqrt(3.0);
  G2Sp2Frame f;
  f.e0 = embed(Element(quat_matrix({3.0 * qi, z, z, qi}, 2)), 9, 0);
  f.e_plus = embed(Element(quat_matrix({z, s3 * one, -s3 * one, 2.0 * qj}, 2)), 9, 0);
  f.e_minus = embed(Element(quat_matrix({z, s3 * qi, s3 * qi, 2.0 * qk}, 2)), 9, 0);
  f.sp1_3 = Subspace::span({f.e0, f.e_plus, f.e_minus});
  f.sp1_1 = Subspace::span({embed(quat_right_diag(qi, 2), 9, 0), embed(quat_right_diag(qj, 2), 9, 0),
                            embed(quat_right_diag(qk, 2), 9, 0)});
  std::vector<Element> h2;
  for (int a = 0; a < 8; ++a) h2.push_back(Element::basis(9, 8, a));
  f.h2 = Subspace::span(h2);
  return f;
}

Matrix ad_on(const Element& x, const Subspace& on) { return ad_matrix(x, on); }

G2Frame build_octonion_frame() {
  G2Frame f;
  const Subspace g8 = triality_frame().g2;
  {
    Matrix cols(49, g8.dim());
    for (int a = 0; a < g8.dim(); ++a) {
      const Matrix m = g8.element(a).matrix().bottomRightCorner(7, 7);
      cols.col(a) = Eigen::Map<const Vector>(m.data(), 49);
    }
    f.g2 = Subspace::from_columns(7, cols);
  }
  f.so4 = linear_kernel(f.g2, [](const Element& x) {
    const Matrix b = x.matrix().block(0, 3, 3, 4);
    return Vector(Eigen::Map<const Vector>(b.data(), b.size()));
  });
  f.su2_1 = linear_kernel(f.g2, [](const Element& x) {
    const Matrix b = x.matrix().leftCols(3);
    return Vector(Eigen::Map<const Vector>(b.data(), b.size()));
  });
  f.su2_3 = complement_in(f.so4, f.su2_1);
  f.p = complement_in(f.g2, f.so4);
  if (f.so4.dim() != 6 || f.su2_1.dim() != 3 || f.su2_3.dim() != 3 || f.p.dim() != 8)
    throw std::logic_error("unexpected dimensions in the g2 splitting");

  Element e0 = f.su2_3.element(0);
  e0 *= 2.0 / spectral_norm(ad_on(e0, f.su2_3));
  Element ep = complement_in(f.su2_3, Subspace::span({e0})).element(0);
  ep *= norm(e0) / norm(ep);
  Element em = 0.5 * bracket(e0, ep);

  Element si = f.su2_1.element(0);
  si *= 1.0 / spectral_norm(ad_on(si, f.p));
  Element sj = complement_in(f.su2_1, Subspace::span({si})).element(0);
  sj *= norm(si) / norm(sj);
  const Matrix adi = ad_on(si, f.p), adj = ad_on(sj, f.p);
  Element sk;
  {
    Matrix a(64, 3);
    for (int b = 0; b < 3; ++b) {
      const Matrix m = ad_on(f.su2_1.element(b), f.p);
      a.col(b) = Eigen::Map<const Vector>(m.data(), 64);
    }
    const Matrix target = adj * adi;
    const Vector c = a.colPivHouseholderQr().solve(Eigen::Map<const Vector>(target.data(), 64));
    sk = f.su2_1.combine(c);
  }

  const double s3 = std::sqrt(3.0);
  Vector v1, v2;
  auto phase = [&](const Element& x0, const Element& xp) {
    const Matrix k = null_space(ad_on(x0, f.p) - 3.0 * adi);
    if (k.cols() != 2) return std::numeric_limits<double>::infinity();
    const Matrix adp = ad_on(xp, f.p);
    auto e2of = [&](const Vector& v) -> Vector { return -(adp * v) / s3; };
    auto resid = [&](const Vector& v) -> Vector {
      const Vector w = e2of(v);
      return adp * w - s3 * v - 2.0 * adj * w;
    };
    Matrix r(8, 2);
    r.col(0) = resid(k.col(0));
    r.col(1) = resid(k.col(1));
    Eigen::SelfAdjointEigenSolver<Matrix> es(r.transpose() * r);
    v1 = k * es.eigenvectors().col(0);
    v2 = e2of(v1);
    return std::sqrt(std::max(es.eigenvalues()(0), 0.0));
  };
  if (phase(e0, ep) > 1e-8) {
    e0 = -e0;
    em = -em;
    if (phase(e0, ep) > 1e-8) throw std::logic_error("no consistent phase for the g2 frame");
  }
  f.e0 = e0;
  f.e_plus = ep;
  f.e_minus = em;
  f.s_i = si;
  f.s_j = sj;
  f.s_k = sk;
  f.e1 = f.p.combine(v1);
  f.e2 = f.p.combine(v2);
  f.lambda = inner(bracket(f.e1, f.e2), ep) / inner(ep, ep);

  const std::array<Matrix, 4> s{Matrix::Identity(8, 8), adi, adj, ad_on(sk, f.p)};
  f.intertwiner.resize(8, 8);
  for (int a = 0; a < 4; ++a) {
    f.intertwiner.col(a) = s[static_cast<std::size_t>(a)] * v1;
    f.intertwiner.col(4 + a) = s[static_cast<std::size_t>(a)] * v2;
  }
  const auto& sp = g2_sp2_frame();
  double defect = 0.0;
  const std::array<std::pair<Element, Element>, 3> pairs{{{e0, sp.e0}, {ep, sp.e_plus}, {em, sp.e_minus}}};
  for (const auto& [x, model] : pairs) {
    const Matrix m = model.matrix().topLeftCorner(8, 8);
    defect = std::max(defect, (ad_on(x, f.p) * f.intertwiner - f.intertwiner * m).norm());
  }
  f.intertwine_defect = defect;
  return f;
}

}  // namespace

const G2Sp2Frame& g2_sp2_frame() {
  static const G2Sp2Frame frame = build_sp2_frame();
  return frame;
}

const G2Frame& g2_octonion_frame() {
  static const G2Frame frame = build_octonion_frame();
  return frame;
}

Subspace su3_in_g2() {
  return linear_kernel(g2_octonion_frame().g2, [](const Element& x) { return Vector(x.matrix().col(0)); });
}

Element su3_to_g2(const ComplexMatrix& a) {
  if (a.rows() != 3 || a.cols() != 3) throw DimensionMismatch(static_cast<int>(a.rows()), 3);
  // complex frame of i^⊥ in Im O: (ε, εi), (εj, −εk), (j, k) with ambient index = octonion index − 1
  Matrix frame = Matrix::Zero(7, 6);
  frame(3, 0) = 1.0;
  frame(4, 1) = 1.0;
  frame(5, 2) = 1.0;
  frame(6, 3) = -1.0;
  frame(1, 4) = 1.0;
  frame(2, 5) = 1.0;
  const Matrix m = frame * complex_to_real(a) * frame.transpose();
  return Element(m);
}

// ---------------------------------------------------------------------------

AlgebraRealization realization_by_name(const std::string& name) {
  static const std::regex classical(R"((so|su|u|sp)\((\d+)\))");
  std::smatch match;
  if (std::regex_match(name, match, classical)) {
    const int n = std::stoi(match[2].str());
    const std::string kind = match[1].str();
    if (kind == "so") return make_so(n);
    if (kind == "su") return make_su(n);
    if (kind == "u") return make_u(n);
    return make_sp(n);
  }
  const auto& t = triality_frame();
  if (name == "g2") return {"g2", t.g2, "derivations of O on R^8"};
  if (name == "g2<so(7)") return {"g2<so(7)", g2_octonion_frame().g2, "derivations of O restricted to Im O"};
  if (name == "spin7+<so(8)") return spin7_in_so8();
  if (name == "spin7-<so(8)") return {"spin7-<so(8)", t.so7_minus, "g2 plus {2L_q + R_q}"};
  if (name == "spin7_0<so(8)") return {"spin7_0<so(8)", t.so7_0, "g2 plus {L_q - R_q}: stabilizer of 1"};
  const auto& su4 = su4_as_so6();
  if (name == "su(4)<so(6)") return su4.so6();
  if (name == "su(3)<so(6)") {
    std::vector<ComplexMatrix> gens;
    for (const auto& a : su_basis(3)) {
      ComplexMatrix b = ComplexMatrix::Zero(4, 4);
      b.topLeftCorner(3, 3) = a;
      gens.push_back(b);
    }
    return {"su(3)<so(6)", su4.image(gens), "su(3) in the upper block of su(4), mapped to so(6)"};
  }
  if (name == "sp(2)<so(6)") return {"sp(2)<so(6)", su4.image(sp2_in_su4_basis()), "sp(2) in su(4), mapped to so(6)"};
  throw PreconditionError("unknown realization name: " + name);
}

std::vector<std::string> realization_names() {
  return {"so(n)", "su(n)", "u(n)", "sp(n)", "g2", "g2<so(7)", "spin7+<so(8)", "spin7-<so(8)", "spin7_0<so(8)",
          "su(4)<so(6)", "su(3)<so(6)", "sp(2)<so(6)"};
}

}  // namespace collar
