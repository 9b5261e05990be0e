#include "collar/linalg.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace collar {

DimensionMismatch::DimensionMismatch(int a, int b)
    : std::invalid_argument("ambient dimension mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b)) {}

void require_same_ambient(int a, int b) {
  if (a != b) throw DimensionMismatch(a, b);
}

Element::Element(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw PreconditionError("element must be square");
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  if (skew_defect() > 1e-12 * scale) throw PreconditionError("element is not skew-symmetric");
}

Element Element::zero(int n) { return trusted(Matrix::Zero(n, n)); }

Element Element::basis(int n, int r, int s) {
  if (r < 0 || s < 0 || r >= n || s >= n || r == s)
    throw PreconditionError("basis index out of range");
  Matrix m = Matrix::Zero(n, n);
  m(s, r) = 1.0;
  m(r, s) = -1.0;
  return trusted(std::move(m));
}

Element Element::trusted(Matrix entries) {
  Element e;
  e.m_ = std::move(entries);
  return e;
}

Element Element::from_flat(int n, const Vector& v) {
  Matrix m = Eigen::Map<const Matrix>(v.data(), n, n);
  return trusted(0.5 * (m - m.transpose()));
}

Element& Element::operator+=(const Element& o) {
  require_same_ambient(ambient_dim(), o.ambient_dim());
  m_ += o.m_;
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_ambient(ambient_dim(), o.ambient_dim());
  m_ -= o.m_;
  return *this;
}

Element& Element::operator*=(double a) {
  m_ *= a;
  return *this;
}

double Element::skew_defect() const {
  if (m_.size() == 0) return 0.0;
  return (m_ + m_.transpose()).cwiseAbs().maxCoeff();
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator-(Element a) { return a *= -1.0; }
Element operator*(double s, Element a) { return a *= s; }
Element operator*(Element a, double s) { return a *= s; }

double inner(const Element& x, const Element& y) {
  require_same_ambient(x.ambient_dim(), y.ambient_dim());
  return x.matrix().cwiseProduct(y.matrix()).sum();
}

double norm(const Element& x) { return std::sqrt(inner(x, x)); }

Element bracket(const Element& x, const Element& y) {
  require_same_ambient(x.ambient_dim(), y.ambient_dim());
  Matrix xy = x.matrix() * y.matrix();
  return Element::trusted(xy - xy.transpose());
}

double wedge_norm(const Element& x, const Element& y) {
  const double xx = inner(x, x), yy = inner(y, y), xy = inner(x, y);
  return std::sqrt(std::max(0.0, xx * yy - xy * xy));
}

Subspace::Subspace(int n) : n_(n), basis_(Matrix::Zero(static_cast<Eigen::Index>(n) * n, 0)) {}

Subspace Subspace::span(const std::vector<Element>& spanning, double tol) {
  if (spanning.empty()) throw PreconditionError("span of an empty list has no ambient dimension");
  const int n = spanning.front().ambient_dim();
  Matrix cols(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(spanning.size()));
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    require_same_ambient(n, spanning[i].ambient_dim());
    cols.col(static_cast<Eigen::Index>(i)) = spanning[i].flat();
  }
  return from_columns(n, cols, tol);
}

Subspace Subspace::from_columns(int n, const Matrix& flat_columns, double tol, double scale) {
  const Eigen::Index len = static_cast<Eigen::Index>(n) * n;
  if (flat_columns.rows() != len) throw DimensionMismatch(static_cast<int>(flat_columns.rows()), static_cast<int>(len));
  Subspace out(n);
  if (flat_columns.cols() == 0) return out;
  const double largest = flat_columns.colwise().norm().maxCoeff();
  if (!(largest > 0.0)) return out;

  Matrix u;
  Vector sv;
  if (flat_columns.cols() > len) {
    // Wide input: reduce to the square triangular factor of a QR of the transpose.
    Eigen::HouseholderQR<Matrix> qr(flat_columns.transpose());
    Matrix r = qr.matrixQR().topRows(len).triangularView<Eigen::Upper>();
    Eigen::JacobiSVD<Matrix> svd(r.transpose(), Eigen::ComputeThinU);
    u = svd.matrixU();
    sv = svd.singularValues();
  } else {
    Eigen::JacobiSVD<Matrix> svd(flat_columns, Eigen::ComputeThinU);
    u = svd.matrixU();
    sv = svd.singularValues();
  }
  Eigen::Index rank = 0;
  const double cut = tol * std::max(sv(0), scale);
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  Matrix basis = u.leftCols(rank);
  for (Eigen::Index c = 0; c < rank; ++c) {
    Eigen::Map<Matrix> m(basis.col(c).data(), n, n);
    Matrix skew = 0.5 * (m - m.transpose());
    m = skew;
  }
  out.basis_ = std::move(basis);
  return out;
}

Subspace Subspace::from_orthonormal(int n, Matrix flat_columns) {
  Subspace out(n);
  if (flat_columns.rows() != static_cast<Eigen::Index>(n) * n)
    throw DimensionMismatch(static_cast<int>(flat_columns.rows()), n * n);
  out.basis_ = std::move(flat_columns);
  return out;
}

Element Subspace::element(int i) const { return Element::from_flat(n_, basis_.col(i)); }

std::vector<Element> Subspace::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) out.push_back(element(i));
  return out;
}

Vector Subspace::coords(const Element& x) const {
  require_same_ambient(n_, x.ambient_dim());
  return basis_.transpose() * x.flat();
}

Element Subspace::combine(const Vector& c) const {
  if (c.size() != dim()) throw DimensionMismatch(static_cast<int>(c.size()), dim());
  if (dim() == 0) return Element::zero(n_);
  Vector v = basis_ * c;
  return Element::trusted(Eigen::Map<const Matrix>(v.data(), n_, n_));
}

Element Subspace::project(const Element& x) const { return combine(coords(x)); }

double Subspace::residual(const Element& x) const { return norm(x - project(x)); }

bool Subspace::contains(const Element& x, double tol) const {
  return residual(x) <= tol * std::max(1.0, norm(x));
}

double Subspace::gram_defect() const {
  if (dim() == 0) return 0.0;
  return (basis_.transpose() * basis_ - Matrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

Subspace sum(const Subspace& a, const Subspace& b, double tol) {
  require_same_ambient(a.ambient_dim(), b.ambient_dim());
  Matrix cols(a.flat_basis().rows(), a.dim() + b.dim());
  cols << a.flat_basis(), b.flat_basis();
  return Subspace::from_columns(a.ambient_dim(), cols, tol);
}

Subspace intersect(const Subspace& u, const Subspace& w, double tol) {
  require_same_ambient(u.ambient_dim(), w.ambient_dim());
  if (u.empty() || w.empty()) return Subspace(u.ambient_dim());
  Matrix cross = u.flat_basis().transpose() * w.flat_basis();
  Eigen::JacobiSVD<Matrix> svd(cross, Eigen::ComputeFullU);
  const Vector& s = svd.singularValues();
  Eigen::Index k = 0;
  while (k < s.size() && s(k) > 1.0 - tol) ++k;
  Matrix dirs = u.flat_basis() * svd.matrixU().leftCols(k);
  return Subspace::from_columns(u.ambient_dim(), dirs, tol);
}

Subspace complement_in(const Subspace& u, const Subspace& w, double tol) {
  require_same_ambient(u.ambient_dim(), w.ambient_dim());
  if (u.empty() || w.empty()) return u;
  Matrix cross = w.flat_basis().transpose() * u.flat_basis();
  Eigen::JacobiSVD<Matrix> svd(cross, Eigen::ComputeFullV);
  const Vector& s = svd.singularValues();
  Eigen::Index k = 0;
  while (k < s.size() && s(k) > tol) ++k;
  Matrix dirs = u.flat_basis() * svd.matrixV().rightCols(u.dim() - k);
  return Subspace::from_columns(u.ambient_dim(), dirs, tol);
}

Subspace projection_image(const Subspace& src, const Subspace& dst, double tol) {
  require_same_ambient(src.ambient_dim(), dst.ambient_dim());
  if (src.empty() || dst.empty()) return Subspace(dst.ambient_dim());
  Matrix cols = dst.flat_basis() * (dst.flat_basis().transpose() * src.flat_basis());
  if (cols.norm() <= tol) return Subspace(dst.ambient_dim());
  return Subspace::from_columns(dst.ambient_dim(), cols, tol);
}

Subspace bracket_span(const Subspace& a, const Subspace& b, double tol) {
  require_same_ambient(a.ambient_dim(), b.ambient_dim());
  const int n = a.ambient_dim();
  if (a.empty() || b.empty()) return Subspace(n);
  const auto ea = a.elements();
  const auto eb = b.elements();
  Matrix cols(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(ea.size() * eb.size()));
  Eigen::Index c = 0;
  for (const auto& x : ea)
    for (const auto& y : eb) cols.col(c++) = bracket(x, y).flat();
  return Subspace::from_columns(n, cols, tol, 1.0);
}

Matrix null_space(const Matrix& a, double tol, double scale) {
  if (a.cols() == 0) return Matrix(0, 0);
  if (a.rows() == 0 || a.cwiseAbs().maxCoeff() == 0.0) return Matrix::Identity(a.cols(), a.cols());
  Matrix reduced = a;
  if (a.rows() > 2 * a.cols()) {
    // Tall maps: the kernel is preserved by the triangular factor of a QR.
    Eigen::HouseholderQR<Matrix> qr(a);
    reduced = qr.matrixQR().topRows(a.cols()).triangularView<Eigen::Upper>();
  }
  Eigen::JacobiSVD<Matrix> svd(reduced, Eigen::ComputeFullV);
  const Vector& s = svd.singularValues();
  Eigen::Index rank = 0;
  const double cut = tol * std::max(s(0), scale);
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

namespace {

Subspace kernel_in_domain(const Matrix& map, const Subspace& domain, double tol, double scale) {
  Matrix ker = null_space(map, tol, scale);
  if (ker.cols() == 0) return Subspace(domain.ambient_dim());
  return Subspace::from_columns(domain.ambient_dim(), domain.flat_basis() * ker, tol);
}

}  // namespace

Subspace solve_commutant(const std::vector<Element>& constraints, const Subspace& domain,
                         double tol) {
  const int n = domain.ambient_dim();
  if (constraints.empty() || domain.empty()) return domain;
  const Eigen::Index len = static_cast<Eigen::Index>(n) * n;
  Matrix map(len * static_cast<Eigen::Index>(constraints.size()), domain.dim());
  const auto dom = domain.elements();
  double scale = 0.0;
  for (const auto& c : constraints) scale = std::max(scale, norm(c));
  for (int i = 0; i < domain.dim(); ++i)
    for (std::size_t j = 0; j < constraints.size(); ++j) {
      require_same_ambient(n, constraints[j].ambient_dim());
      map.block(len * static_cast<Eigen::Index>(j), i, len, 1) = bracket(dom[i], constraints[j]).flat();
    }
  return kernel_in_domain(map, domain, tol, scale);
}

Subspace normalizer(const Subspace& target, const Subspace& domain, double tol) {
  require_same_ambient(target.ambient_dim(), domain.ambient_dim());
  const int n = domain.ambient_dim();
  if (target.empty() || domain.empty()) return domain;
  const Eigen::Index len = static_cast<Eigen::Index>(n) * n;
  const auto tgt = target.elements();
  const auto dom = domain.elements();
  const Matrix& t = target.flat_basis();
  Matrix map(len * target.dim(), domain.dim());
  for (int i = 0; i < domain.dim(); ++i)
    for (int j = 0; j < target.dim(); ++j) {
      Vector b = bracket(dom[i], tgt[j]).flat();
      map.block(len * j, i, len, 1) = b - t * (t.transpose() * b);
    }
  return kernel_in_domain(map, domain, tol, 1.0);
}

Subspace linear_kernel(const Subspace& domain, const std::function<Vector(const Element&)>& map,
                       double tol) {
  if (domain.empty()) return domain;
  const auto dom = domain.elements();
  Matrix stacked;
  for (int i = 0; i < domain.dim(); ++i) {
    const Vector v = map(dom[static_cast<std::size_t>(i)]);
    if (i == 0) stacked.resize(v.size(), domain.dim());
    stacked.col(i) = v;
  }
  return kernel_in_domain(stacked, domain, tol, 0.0);
}

Matrix ad_matrix(const Element& x, const Subspace& on) {
  Matrix out(on.dim(), on.dim());
  for (int j = 0; j < on.dim(); ++j) out.col(j) = on.coords(bracket(x, on.element(j)));
  return out;
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
}

double bracket_residual(const Subspace& a, const Subspace& b, const Subspace& into) {
  double worst = 0.0;
  const auto eb = b.elements();
  for (const auto& x : a.elements())
    for (const auto& y : eb) worst = std::max(worst, into.residual(bracket(x, y)));
  return worst;
}

double closure_residual(const Subspace& u) { return bracket_residual(u, u, u); }

double inclusion_residual(const Subspace& inner_space, const Subspace& outer) {
  double worst = 0.0;
  for (const auto& x : inner_space.elements()) worst = std::max(worst, outer.residual(x));
  return worst;
}

Vector principal_cosines(const Subspace& u, const Subspace& w) {
  require_same_ambient(u.ambient_dim(), w.ambient_dim());
  if (u.empty() || w.empty()) return Vector(0);
  Matrix cross = u.flat_basis().transpose() * w.flat_basis();
  return Eigen::JacobiSVD<Matrix>(cross).singularValues();
}

Element conjugate(const Element& x, const Matrix& g) {
  Matrix m = g * x.matrix() * g.transpose();
  return Element::trusted(0.5 * (m - m.transpose()));
}

Subspace conjugate(const Subspace& u, const Matrix& g) {
  const int n = u.ambient_dim();
  Matrix cols(u.flat_basis().rows(), u.dim());
  for (int i = 0; i < u.dim(); ++i) cols.col(i) = conjugate(u.element(i), g).flat();
  return Subspace::from_orthonormal(n, std::move(cols));
}

}  // namespace collar
