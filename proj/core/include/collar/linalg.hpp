#pragma once

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace collar {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Default relative rank tolerance for subspace operations.
inline constexpr double kDefaultTol = 1e-8;

class DimensionMismatch : public std::invalid_argument {
public:
  DimensionMismatch(int a, int b);
};

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A skew-symmetric N×N real matrix, the only element type in the library.
class Element {
public:
  Element() = default;
  explicit Element(Matrix entries);

  static Element zero(int n);
  /// E_rs = e_s e_rᵀ − e_r e_sᵀ (0-based indices), so E_rs e_r = e_s.
  static Element basis(int n, int r, int s);
  /// Wraps a matrix without the skew check; callers guarantee the invariant.
  static Element trusted(Matrix entries);

  int ambient_dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double operator()(int r, int c) const { return m_(r, c); }

  /// Column-major flattening; Q(X,Y) is the dot product of flattenings.
  Eigen::Map<const Vector> flat() const { return {m_.data(), m_.size()}; }
  static Element from_flat(int n, const Vector& v);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(double a);

  double skew_defect() const;

private:
  Matrix m_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(Element a);
Element operator*(double s, Element a);
Element operator*(Element a, double s);

/// Q(X,Y) = −trace(XY).
double inner(const Element& x, const Element& y);
double norm(const Element& x);
Element bracket(const Element& x, const Element& y);
double wedge_norm(const Element& x, const Element& y);

/// A subspace of so(N) held as a Q-orthonormal basis (columns of the flattening matrix).
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(int n);

  static Subspace span(const std::vector<Element>& spanning, double tol = kDefaultTol);
  /// Orthonormalizes the columns of `flat_columns` (each of length N²). Singular values below
  /// tol·max(σ_max, scale) are dropped, so a positive `scale` also discards pure round-off.
  static Subspace from_columns(int n, const Matrix& flat_columns, double tol = kDefaultTol, double scale = 0.0);
  /// Adopts columns that are already orthonormal.
  static Subspace from_orthonormal(int n, Matrix flat_columns);

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  bool empty() const { return dim() == 0; }
  const Matrix& flat_basis() const { return basis_; }

  Element element(int i) const;
  std::vector<Element> elements() const;
  Vector coords(const Element& x) const;
  Element combine(const Vector& c) const;
  Element project(const Element& x) const;
  /// ‖x − project(x)‖.
  double residual(const Element& x) const;
  bool contains(const Element& x, double tol = 1e-9) const;
  double gram_defect() const;

private:
  int n_ = 0;
  Matrix basis_;
};

void require_same_ambient(int a, int b);

Subspace sum(const Subspace& a, const Subspace& b, double tol = kDefaultTol);
Subspace intersect(const Subspace& u, const Subspace& w, double tol = kDefaultTol);
/// u ∩ w^⊥.
Subspace complement_in(const Subspace& u, const Subspace& w, double tol = kDefaultTol);
/// Orthogonal projection of `src` onto `dst`, re-orthonormalized.
Subspace projection_image(const Subspace& src, const Subspace& dst, double tol = kDefaultTol);
Subspace bracket_span(const Subspace& a, const Subspace& b, double tol = kDefaultTol);

/// {X ∈ domain : [X, c] = 0 for all c}.
Subspace solve_commutant(const std::vector<Element>& constraints, const Subspace& domain,
                         double tol = kDefaultTol);
/// {X ∈ domain : [X, target] ⊆ target}.
Subspace normalizer(const Subspace& target, const Subspace& domain, double tol = kDefaultTol);

/// Kernel of a linear map from `domain` into Rᵏ, given pointwise on basis elements.
Subspace linear_kernel(const Subspace& domain, const std::function<Vector(const Element&)>& map,
                       double tol = kDefaultTol);
/// Matrix of ad_x restricted to an ad_x-invariant subspace, in its orthonormal coordinates.
Matrix ad_matrix(const Element& x, const Subspace& on);
/// Largest singular value of a dense matrix (0 for empty).
double spectral_norm(const Matrix& a);

/// Largest projection residual of [a_i, b_j] off `into`.
double bracket_residual(const Subspace& a, const Subspace& b, const Subspace& into);
double closure_residual(const Subspace& u);
/// Largest residual of basis vectors of `inner` off `outer`.
double inclusion_residual(const Subspace& inner, const Subspace& outer);
/// Cosines of principal angles, descending.
Vector principal_cosines(const Subspace& u, const Subspace& w);

Element conjugate(const Element& x, const Matrix& g);
Subspace conjugate(const Subspace& u, const Matrix& g);

/// Kernel of a dense map; singular values below tol·max(σ_max, scale) count as zero.
Matrix null_space(const Matrix& a, double tol = kDefaultTol, double scale = 0.0);

}  // namespace collar
