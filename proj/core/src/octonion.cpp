#include "collar/octonion.hpp"

#include <Eigen/SVD>

#include <functional>

namespace collar {

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
  return {a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3),
          a(0) * b(1) + a(1) * b(0) + a(2) * b(3) - a(3) * b(2),
          a(0) * b(2) - a(1) * b(3) + a(2) * b(0) + a(3) * b(1),
          a(0) * b(3) + a(1) * b(2) - a(2) * b(1) + a(3) * b(0)};
}

Quaternion quat_conj(const Quaternion& a) { return {a(0), -a(1), -a(2), -a(3)}; }

Octonion Octonion::unit(int index) {
  if (index < 0 || index >= 8) throw PreconditionError("octonion basis index out of range");
  Coords c = Coords::Zero();
  c(index) = 1.0;
  return Octonion(c);
}

Octonion Octonion::conj() const {
  Coords c = -c_;
  c(0) = c_(0);
  return Octonion(c);
}

Octonion Octonion::operator*(const Octonion& o) const {
  const Quaternion a1 = c_.head<4>(), a2 = c_.tail<4>();
  const Quaternion b1 = o.c_.head<4>(), b2 = o.c_.tail<4>();
  Coords out;
  out.head<4>() = quat_mul(a1, b1) - quat_mul(quat_conj(b2), a2);
  out.tail<4>() = quat_mul(b2, a1) + quat_mul(a2, quat_conj(b1));
  return Octonion(out);
}

Octonion oct_mul(const Octonion& a, const Octonion& b) { return a * b; }

namespace {

Element mult_matrix(const Octonion& q, bool left) {
  if (!q.is_imaginary()) throw PreconditionError("multiplication operator requires an imaginary octonion");
  Matrix m(8, 8);
  for (int c = 0; c < 8; ++c) {
    const Octonion e = Octonion::unit(c);
    m.col(c) = (left ? q * e : e * q).coords();
  }
  return Element::trusted(0.5 * (m - m.transpose()));
}

Subspace so8() {
  std::vector<Element> gens;
  for (int r = 0; r < 8; ++r)
    for (int s = r + 1; s < 8; ++s) gens.push_back(Element::basis(8, r, s));
  return Subspace::span(gens);
}

Subspace imaginary_span(const std::function<Element(const Octonion&)>& f) {
  std::vector<Element> gens;
  for (int i = 1; i < 8; ++i) gens.push_back(f(Octonion::unit(i)));
  return Subspace::span(gens);
}

TrialityFrame build_frame() {
  TrialityFrame f;
  f.g2 = derivation_algebra();
  f.v_l = imaginary_span(left_mult);
  f.v_r = imaginary_span(right_mult);
  f.m0 = imaginary_span([](const Octonion& q) { return left_mult(q) - right_mult(q); });
  f.s0 = imaginary_span([](const Octonion& q) { return left_mult(q) + right_mult(q); });
  f.m_plus = imaginary_span([](const Octonion& q) { return left_mult(q) + 2.0 * right_mult(q); });
  f.s_plus = f.v_l;
  f.m_minus = imaginary_span([](const Octonion& q) { return 2.0 * left_mult(q) + right_mult(q); });
  f.s_minus = f.v_r;
  f.so7_0 = sum(f.g2, f.m0);
  f.so7_plus = sum(f.g2, f.m_plus);
  f.so7_minus = sum(f.g2, f.m_minus);
  return f;
}

Matrix direct_sum_matrix() {
  const auto& f = triality_frame();
  Matrix b(64, 28);
  b << f.g2.flat_basis(), f.v_l.flat_basis(), f.v_r.flat_basis();
  return b;
}

}  // namespace

Element left_mult(const Octonion& q) { return mult_matrix(q, true); }
Element right_mult(const Octonion& q) { return mult_matrix(q, false); }

Subspace derivation_algebra() {
  const Subspace so = so8();
  const auto basis = so.elements();
  Matrix map(8 * 64, so.dim());
  for (int a = 0; a < so.dim(); ++a) {
    const Matrix& m = basis[static_cast<std::size_t>(a)].matrix();
    for (int r = 0; r < 8; ++r)
      for (int s = 0; s < 8; ++s) {
        const Octonion x = Octonion::unit(r), y = Octonion::unit(s);
        const Octonion ax(m * x.coords()), ay(m * y.coords());
        const Octonion axy(m * (x * y).coords());
        map.block(8 * (8 * r + s), a, 8, 1) = (axy - ax * y - x * ay).coords();
      }
  }
  const Matrix ker = null_space(map);
  return Subspace::from_columns(8, so.flat_basis() * ker);
}

const TrialityFrame& triality_frame() {
  static const TrialityFrame frame = build_frame();
  return frame;
}

int direct_sum_rank() {
  Eigen::JacobiSVD<Matrix> svd(direct_sum_matrix());
  svd.setThreshold(kDefaultTol);
  return static_cast<int>(svd.rank());
}

DirectSumParts split_direct_sum(const Element& x) {
  require_same_ambient(8, x.ambient_dim());
  const auto& f = triality_frame();
  const Matrix b = direct_sum_matrix();
  const Vector c = b.colPivHouseholderQr().solve(Vector(x.flat()));
  return {f.g2.combine(c.segment(0, 14)), f.v_l.combine(c.segment(14, 7)),
          f.v_r.combine(c.segment(21, 7))};
}

}  // namespace collar
