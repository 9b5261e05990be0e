#pragma once

#include "collar/linalg.hpp"

#include <random>

namespace collar::test {

inline Element random_skew(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = g(rng);
  return Element(a - a.transpose());
}

inline Element random_in(const Subspace& u, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector c(u.dim());
  for (int i = 0; i < u.dim(); ++i) c(i) = g(rng);
  return u.combine(c);
}

/// Haar-ish orthogonal matrix from the QR factor of a Gaussian matrix.
inline Matrix random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = g(rng);
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ();
}

/// E_rs with 1-based indices as written in the literature.
inline Element E(int n, int r, int s) { return Element::basis(n, r - 1, s - 1); }

/// Dense-product oracle for the commutator.
inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

/// Gram-determinant oracle for |X∧Y|.
inline double gram_wedge(const Matrix& x, const Matrix& y) {
  const double xx = -(x * x).trace(), yy = -(y * y).trace(), xy = -(x * y).trace();
  return std::sqrt(std::max(0.0, xx * yy - xy * xy));
}

inline double dist(const Element& a, const Element& b) { return (a.matrix() - b.matrix()).norm(); }

}  // namespace collar::test
