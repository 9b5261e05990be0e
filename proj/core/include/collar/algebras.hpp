#pragma once

#include "collar/linalg.hpp"
#include "collar/octonion.hpp"

#include <complex>
#include <string>
#include <vector>

namespace collar {

using ComplexMatrix = Eigen::MatrixXcd;

struct AlgebraRealization {
  std::string name;
  Subspace space;
  std::string meta;

  int ambient_dim() const { return space.ambient_dim(); }
  int dim() const { return space.dim(); }
};

AlgebraRealization make_so(int n);
/// Complex n×n realified on R²ⁿ with z_r ↦ (Re z_r, Im z_r).
AlgebraRealization make_su(int n);
AlgebraRealization make_u(int n);
/// Quaternionic n×n acting on the left of Hⁿ ≅ R⁴ⁿ.
AlgebraRealization make_sp(int n);

Element embed(const Element& x, int ambient, int offset);
Subspace embed(const Subspace& u, int ambient, int offset);
AlgebraRealization embed_block(const AlgebraRealization& inner, int ambient, int offset);

/// span{E_rs : offset ≤ r < s < offset + n} inside so(ambient).
Subspace so_block(int n, int ambient, int offset);

/// a + ib ↦ [[a, −b], [b, a]] entrywise.
Matrix complex_to_real(const ComplexMatrix& a);
/// Traceless skew-Hermitian basis: E_rs, i(E_rs symmetric), diag(i, −i) shifts.
std::vector<ComplexMatrix> su_basis(int n);
/// Realification of the complex structure i·Id on Cⁿ.
Element complex_structure(int n);

/// 4×4 matrix of x ↦ qx on H, and of x ↦ xq.
Matrix quat_left(const Quaternion& q);
Matrix quat_right(const Quaternion& q);
/// Quaternionic n×n matrix given row-major as n² quaternions, acting on the left.
Matrix quat_matrix(const std::vector<Quaternion>& entries, int n);
/// x ↦ x·q applied to every slot of Hⁿ.
Element quat_right_diag(const Quaternion& q, int n);

/// su(4) ≅ so(6) via Λ²C⁴ restricted to the real form fixed by the Hodge-type conjugation.
class Su4AsSo6 {
public:
  Su4AsSo6();
  const AlgebraRealization& so6() const { return so6_; }
  Element operator()(const ComplexMatrix& a) const;
  Subspace image(const std::vector<ComplexMatrix>& gens) const;

private:
  Matrix frame_;  // 12×6, orthonormal columns spanning the real form
  AlgebraRealization so6_;
};
const Su4AsSo6& su4_as_so6();

/// sp(2) ⊂ su(4): the commutant of the realified antilinear structure.
std::vector<ComplexMatrix> sp2_in_su4_basis();

AlgebraRealization spin7_in_so8();

/// sp(1)₃ ⊕ sp(1)₁ ⊕ H² inside the real expansion of sp(2) ⊂ so(8), padded into so(9) so that
/// H² is carried by E(8, a).
struct G2Sp2Frame {
  Element e0, e_plus, e_minus;
  Subspace sp1_3, sp1_1, h2;
};
const G2Sp2Frame& g2_sp2_frame();

/// The same splitting located inside g₂ acting on Im O (ambient 7).
struct G2Frame {
  Subspace g2, so4, su2_1, su2_3, p;
  Element e0, e_plus, e_minus;
  Element s_i, s_j, s_k;
  Element e1, e2;
  double lambda = 0.0;  ///< [e1, e2] = λ E₊
  Matrix intertwiner;   ///< H² coordinates → coordinates of p
  double intertwine_defect = 0.0;
};
const G2Frame& g2_octonion_frame();

/// su(3) ⊂ g₂ fixing i, acting on Im O.
Subspace su3_in_g2();
/// Real 7×7 image of a complex 3×3 matrix under the complex frame of i^⊥ ⊂ Im O.
Element su3_to_g2(const ComplexMatrix& a);

/// Names: so(n), su(n), u(n), sp(n), g2, spin7+<so(8), spin7-<so(8), spin7_0<so(8),
/// su(4)<so(6), su(3)<so(6), sp(2)<so(6), g2<so(7).
AlgebraRealization realization_by_name(const std::string& name);
std::vector<std::string> realization_names();

}  // namespace collar
