#pragma once

#include "collar/linalg.hpp"

#include <array>

namespace collar {

/// Coordinates in the basis (1, i, j, k, ε, εi, εj, εk).
class Octonion {
public:
  using Coords = Eigen::Matrix<double, 8, 1>;

  Octonion() : c_(Coords::Zero()) {}
  explicit Octonion(const Coords& c) : c_(c) {}

  static Octonion unit(int index);
  static Octonion one() { return unit(0); }

  const Coords& coords() const { return c_; }
  double operator[](int i) const { return c_(i); }
  double norm() const { return c_.norm(); }
  bool is_imaginary(double tol = 1e-12) const { return std::abs(c_(0)) <= tol; }

  Octonion conj() const;
  Octonion operator*(const Octonion& o) const;
  Octonion operator+(const Octonion& o) const { return Octonion(c_ + o.c_); }
  Octonion operator-(const Octonion& o) const { return Octonion(c_ - o.c_); }

private:
  Coords c_;
};

using Quaternion = Eigen::Vector4d;
Quaternion quat_mul(const Quaternion& a, const Quaternion& b);
Quaternion quat_conj(const Quaternion& a);

Octonion oct_mul(const Octonion& a, const Octonion& b);

/// 8×8 matrix of x ↦ qx; throws PreconditionError unless q is imaginary.
Element left_mult(const Octonion& q);
/// 8×8 matrix of x ↦ xq; throws PreconditionError unless q is imaginary.
Element right_mult(const Octonion& q);

/// g₂ as the kernel of the derivation defect on so(8).
Subspace derivation_algebra();

struct TrialityFrame {
  Subspace g2;
  Subspace v_l, v_r;
  Subspace so7_0, so7_plus, so7_minus;
  Subspace m0, s0, m_plus, s_plus, m_minus, s_minus;
};

/// Built once per process and shared read-only.
const TrialityFrame& triality_frame();

/// Components of X ∈ so(8) along the direct sum g₂ ⊕ V_L ⊕ V_R.
struct DirectSumParts {
  Element g2, l, r;
};
DirectSumParts split_direct_sum(const Element& x);

/// Rank of the 28×28 matrix assembled from the bases of g₂, V_L and V_R.
int direct_sum_rank();

}  // namespace collar
