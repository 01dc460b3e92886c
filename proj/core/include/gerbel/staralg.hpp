#pragma once

#include <vector>

#include "gerbel/numerics.hpp"
#include "gerbel/twogroup.hpp"

namespace gerbel {

class StarAlgebra;

/// Element of a direct sum of matrix blocks.
struct AlgebraElement {
  const StarAlgebra* parent = nullptr;
  std::vector<CMatrix> blocks;
};

/// Finite-dimensional *-algebra A = ⊕_k M_{n_k} with faithful trace
/// τ(a) = Σ w_k tr(a_k). The underlying Hilbert space of L²(A) is the
/// vectorization of A (blocks concatenated, row-major), with inner product
/// ⟨a,b⟩ = τ(a*b).
class StarAlgebra {
 public:
  explicit StarAlgebra(std::vector<int> block_dims, std::vector<double> weights = {});

  const std::vector<int>& block_dims() const { return block_dims_; }
  const std::vector<double>& weights() const { return weights_; }
  int dim() const { return dim_; }

  bool operator==(const StarAlgebra& o) const {
    return block_dims_ == o.block_dims_ && weights_ == o.weights_;
  }

  CVector vec(const AlgebraElement& a) const;
  AlgebraElement unvec(const CVector& v) const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  /// Matrix-unit basis element: block k, entry (i,j).
  AlgebraElement unit(int block, int i, int j) const;
  /// All matrix units, in vectorization order.
  std::vector<AlgebraElement> basis() const;

  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement star(const AlgebraElement& a) const;
  Complex trace(const AlgebraElement& a) const;
  Complex inner(const AlgebraElement& a, const AlgebraElement& b) const;

  /// Gram matrix of the vectorization basis (diagonal, from the weights).
  CMatrix gram() const;

  /// Matrix of ξ ↦ aξ on the vectorized space.
  CMatrix left_mult_matrix(const AlgebraElement& a) const;
  /// Matrix of ξ ↦ ξb.
  CMatrix right_mult_matrix(const AlgebraElement& b) const;

  /// Modular conjugation J(ξ) = ξ*. Antilinear: J(v) = conj_matrix() * conj(v).
  CVector modular_conjugation(const CVector& v) const;
  /// The real structure matrix S with J(v) = S * conj(v).
  CMatrix conj_matrix() const;

  bool is_unitary_element(const AlgebraElement& u, Tolerance tol = default_tolerance()) const;

 private:
  std::vector<int> block_dims_;
  std::vector<double> weights_;
  std::vector<int> offsets_;
  int dim_;
};

/// *-automorphism of A, stored as its (complex-linear) action matrix on the
/// vectorized algebra. Multiplicativity, star-preservation and bijectivity
/// are verified at construction.
class Automorphism {
 public:
  Automorphism(const StarAlgebra& parent, CMatrix action,
               Tolerance tol = default_tolerance());

  static Automorphism identity(const StarAlgebra& a);
  /// Ad_u: a ↦ u a u*.
  static Automorphism inner(const StarAlgebra& a, const AlgebraElement& u,
                            Tolerance tol = default_tolerance());

  const StarAlgebra& parent() const { return *parent_; }
  const CMatrix& action() const { return action_; }
  AlgebraElement apply(const AlgebraElement& a) const;
  Automorphism compose(const Automorphism& other) const;
  Automorphism inverse() const;

  bool is_trace_preserving(Tolerance tol = default_tolerance()) const;
  bool approx(const Automorphism& other, Tolerance tol = default_tolerance()) const {
    return approx_equal(action_, other.action_, tol);
  }

 private:
  Automorphism(const StarAlgebra& parent, CMatrix action, bool skip_checks);
  const StarAlgebra* parent_;
  CMatrix action_;
};

/// Element (θ₁, U, θ₂) of I(L²(A)) ≅ N(A): a unitary on L²(A) intertwining
/// the left action along θ₁ and the right action along θ₂.
struct NElement {
  Automorphism theta1;
  CMatrix u;
  Automorphism theta2;
};

/// Validates the intertwining relations of an NElement on the full basis.
Report check_n_element(const NElement& n, Tolerance tol = default_tolerance());

/// L²(θ) for trace-preserving θ: acts as θ on the underlying space of A,
/// commutes with J, intertwines both sides along θ.
NElement canonical_implementation(const Automorphism& theta,
                                  Tolerance tol = default_tolerance());

/// Recovers (t(U), s(U)) = (θ₁, θ₂) from the unitary alone by solving the
/// intertwining relations; throws if U is not in N(A) or disagrees with the
/// stored automorphisms.
std::pair<Automorphism, Automorphism> source_target(const NElement& n,
                                                    Tolerance tol = default_tolerance());

/// Composition U ∘ V = U·L²(θ)*·V for θ = s(U) = t(V).
NElement compose_in_UA(const NElement& u, const NElement& v,
                       Tolerance tol = default_tolerance());

/// JUJ, an NElement with swapped source and target automorphisms.
NElement conjugate_by_modular(const NElement& n, Tolerance tol = default_tolerance());

/// Finite subgroup data carried into build_UA: automorphisms (objects) and
/// N-elements (morphisms), both closed under the group operations, s, t, i.
struct UACarrier {
  const StarAlgebra* algebra = nullptr;
  std::vector<Automorphism> objects;
  std::vector<NElement> morphisms;
};

/// Finite sub-2-group of 𝒰(A) on the given carrier. Throws a closure error
/// naming the offending product if the carrier is not closed.
TwoGroup build_UA(const UACarrier& carrier, Tolerance tol = default_tolerance());

/// Unitary representation of a finite 2-group on A: R0 indexed by G0
/// elements, R1 by G1 elements.
struct Representation {
  const TwoGroup* group = nullptr;
  const StarAlgebra* algebra = nullptr;
  std::vector<Automorphism> R0;
  std::vector<NElement> R1;
};

/// The three compatibility equations of a unitary 2-group representation,
/// plus homomorphism properties of R0, R1 and a composition spot check.
Report check_representation(const Representation& rep,
                            Tolerance tol = default_tolerance());

}  // namespace gerbel
