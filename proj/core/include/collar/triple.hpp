#pragma once

#include "collar/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace collar {

/// h ⊆ k ⊆ g in a shared so(N).
struct Triple {
  std::string name;
  Subspace g, k, h;
  /// Replaces the normalizer when (dim k₀, dim h₀, dim m) = (36, 21, 15).
  std::optional<Subspace> h1_override;

  int ambient_dim() const { return g.ambient_dim(); }
};

/// Throws PreconditionError naming the first failed invariant.
void validate(const Triple& t, double tol = 1e-9);

enum class PhiClass { Phi1, Phi2, Inconclusive };
const char* to_string(PhiClass c);

struct PhiEvidence {
  PhiClass verdict = PhiClass::Inconclusive;
  double min_sigma = 0.0;
  double scale = 1.0;
  Element x_m, y_s;
  int restarts = 0;
};

struct Component {
  Subspace space;
  PhiEvidence phi;
  bool possibly_reducible = false;
};

struct DecomposeOptions {
  bool split_s = true;
  bool classify = true;
  int phi_restarts = 8;
  std::uint64_t seed = 0;
};

struct Decomposition {
  Triple triple;
  Subspace m, s, p;
  Subspace k0, h0, hprime;
  Subspace h1, m1;
  bool h1_overridden = false;
  Subspace l, z_l, n_l;
  std::vector<Component> components;
  Subspace s1, s2;
  /// s ∩ n(l) and the part of s ∩ n(l)^⊥ not assigned to s1 or s2.
  Subspace s_nl, s_rest;
  double tol = kDefaultTol;

  int ambient_dim() const { return triple.ambient_dim(); }
  /// m₁ when nonzero, else m.
  const Subspace& m_eff() const { return m1.empty() ? m : m1; }
};

/// Smallest ideal of `k` containing `gens`.
Subspace ideal_closure(const Subspace& gens, const Subspace& k, double tol = kDefaultTol);
/// Lie subalgebra generated by `gens`.
Subspace generated_subalgebra(const Subspace& gens, double tol = kDefaultTol);

Decomposition decompose(const Triple& t, double tol = kDefaultTol, const DecomposeOptions& opts = {});

/// Ad_l-invariant splitting of s ∩ n(l)^⊥.
std::vector<Component> isotypic_split(const Decomposition& dec, std::uint64_t seed);

PhiEvidence classify_phi(const Decomposition& dec, const Subspace& v, int restarts, std::uint64_t seed = 0);

bool transitivity_check(const Decomposition& dec, const Element& y_s);

bool symmetric_pair_check(const Subspace& g, const Subspace& n0, double tol = 1e-9);

/// Conjugates every space of the triple by an orthogonal matrix.
Triple conjugate(const Triple& t, const Matrix& g);

}  // namespace collar
