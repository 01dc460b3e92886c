#pragma once

#include "gerbel/staralg.hpp"

namespace gerbel {

/// Finite-dimensional A-B-bimodule: carrier C^dim with a positive-definite
/// Gram form and commuting *-representations of A (left) and B (right),
/// stored as one matrix per algebra basis element and extended linearly.
struct Bimodule {
  const StarAlgebra* left_alg = nullptr;
  const StarAlgebra* right_alg = nullptr;
  int dim = 0;
  CMatrix gram;
  std::vector<CMatrix> left_action;
  std::vector<CMatrix> right_action;

  CMatrix act_left(const AlgebraElement& a) const;
  CMatrix act_right(const AlgebraElement& b) const;
};

/// Structural checks: unitality, (anti-)multiplicativity of the actions,
/// commutation of left and right actions, *-compatibility w.r.t. the Gram
/// form.
Report check_bimodule(const Bimodule& m, Tolerance tol = default_tolerance());

/// L²(A) as an A-A-bimodule.
Bimodule standard_bimodule(const StarAlgebra& a);

/// L²(A)_θ: standard left action, right action ξ ⊳_θ b = ξ·θ(b).
Bimodule twisted_standard(const StarAlgebra& a, const Automorphism& theta);

/// Linear map between bimodules intertwining the actions along the stored
/// twists (identity twists for honest intertwiners).
struct Intertwiner {
  Bimodule source;
  Bimodule target;
  CMatrix u;  // target.dim × source.dim
  Automorphism left_twist;
  Automorphism right_twist;

  static Intertwiner identity(const Bimodule& m);
};

Report check_intertwiner(const Intertwiner& it, bool require_unitary = true,
                         Tolerance tol = default_tolerance());

Intertwiner compose(const Intertwiner& f, const Intertwiner& g,
                    Tolerance tol = default_tolerance());

/// Result of the relative tensor product H ⊗_B K: the quotient of the
/// algebraic tensor product by the balanced null space, realized through the
/// B-valued inner product. `embed` holds orthonormal representatives in the
/// ambient tensor space (columns), `coord` maps an ambient vector to fused
/// coordinates (coord * embed = I), and `semigram` is the positive
/// semi-definite ambient form whose kernel is the balanced relations.
struct Fusion {
  Bimodule module;  // gram = identity
  int dim_left = 0;
  int dim_right = 0;
  CMatrix embed;
  CMatrix coord;
  CMatrix semigram;
};

/// Relative tensor product over B = h.right_alg = k.left_alg.
Fusion fuse(const Bimodule& h, const Bimodule& k, Tolerance tol = default_tolerance());

/// U ⊠ V on balanced tensors. Requires u.right_twist == v.left_twist; the
/// source (target) Fusion must be fuse of the u,v sources (targets).
Intertwiner fuse_intertwiners(const Intertwiner& u, const Intertwiner& v,
                              const Fusion& source, const Fusion& target,
                              Tolerance tol = default_tolerance());

/// Unitor fuse(L²(A), M) → M, a ⊗ ξ ↦ a ⊲ ξ; f must be fuse(standard, m).
Intertwiner left_unitor(const Fusion& f, const Bimodule& m,
                        Tolerance tol = default_tolerance());
/// Unitor fuse(M, L²(B)) → M, ξ ⊗ b ↦ ξ ⊳ b; f must be fuse(m, standard).
Intertwiner right_unitor(const Fusion& f, const Bimodule& m,
                         Tolerance tol = default_tolerance());

/// Both bracketings of a triple fusion and the canonical associator
/// (H ⊠ K) ⊠ L → H ⊠ (K ⊠ L) between them (left-to-right bracketing is the
/// library-wide convention).
struct TripleFusion {
  Fusion hk;
  Fusion hk_l;
  Fusion kl;
  Fusion h_kl;
  Intertwiner assoc;
};
TripleFusion fuse_triple(const Bimodule& h, const Bimodule& k, const Bimodule& l,
                         Tolerance tol = default_tolerance());

/// χ_{θ₁,θ₂}: L²(A)_θ₁ ⊠ L²(A)_θ₂ → L²(A)_{θ₁∘θ₂}, a⊗b ↦ a·θ₁(b).
/// `f` must be fuse(L²(A)_θ₁, L²(A)_θ₂).
Intertwiner chi(const StarAlgebra& a, const Automorphism& theta1,
                const Automorphism& theta2, const Fusion& f,
                Tolerance tol = default_tolerance());

/// 𝒯(U) = L²(θ₁)·U*: an honest unitary intertwiner L²(A)_θ₂ → L²(A)_θ₁.
Intertwiner functor_T(const NElement& n, Tolerance tol = default_tolerance());

/// Conjugate bimodule: B-A-bimodule on the conjugate space with
/// b ⊲ ξ̄ ⊳ a = conj(a* ⊲ ξ ⊳ b*).
Bimodule conjugate(const Bimodule& m);

}  // namespace gerbel
