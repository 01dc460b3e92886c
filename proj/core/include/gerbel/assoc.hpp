#pragma once

#include "gerbel/fusion.hpp"
#include "gerbel/gerbe.hpp"

namespace gerbel {

/// Family of bimodules over a finite base, all over one algebra (the
/// trivial-algebra-bundle setting used throughout).
struct BimoduleBundle {
  FiniteSpace base;
  const StarAlgebra* algebra = nullptr;
  std::vector<Bimodule> fibres;
};

Report check_bimodule_bundle(const BimoduleBundle& m,
                             Tolerance tol = default_tolerance());

/// Mod(P) = (P × L²(A))/𝒢_s for a principal 2-bundle whose structure
/// 2-group acts on A through a verified representation. The quotient is
/// realized on canonical fibre representatives: the fibre over x is the
/// twisted standard bimodule L²(A)_{R₀(φ(p*))} for the lowest-index point p*
/// of the fibre, the equivalence being (p, ξ)·g = (p·g, ξ·u(g)) with u(g)
/// the unitary implementing R₁(g) by left multiplication.
struct ModBundle {
  const PrincipalTwoBundle* p = nullptr;
  const Representation* rep = nullptr;
  BimoduleBundle m;
  /// Twist of the fibre: R₀(φ(p*)) per base point.
  std::vector<Automorphism> twists;
  std::vector<int> base_rep;   // base point -> canonical total point p*
  std::vector<int> section_h;  // total point -> h with p = p*·h
  /// Unitary u(h) per 𝒢_s element, with R₁(h) = left multiplication by u(h).
  std::vector<AlgebraElement> u_of_h;

  const Bimodule& fibre(int x) const { return m.fibres[x]; }
  /// Per-section trivialization τ_p: fibre over the base point of p (in
  /// canonical coordinates) → L²(A)_{R₀(φ(p))}; right multiplication by
  /// u(h) for p = p*·h. τ_{p*} is the identity.
  CMatrix tau(int point) const;
};

ModBundle mod_of_bundle(const PrincipalTwoBundle& p, const Representation& rep,
                        Tolerance tol = default_tolerance());

/// Mod(f): [p, ξ] ↦ [f(p), ξ], one verified unitary intertwiner
/// Mod(P)_x → Mod(Q)_x per base point.
std::vector<Intertwiner> mod_of_morphism(const TwoBundleMorphism& f,
                                         const ModBundle& src,
                                         const ModBundle& dst,
                                         Tolerance tol = default_tolerance());

/// Monoidality of Mod: the intertwiner Mod(P) ⊠ Mod(Q) → Mod(P⊗Q) given at
/// each point by τ_{p⊗q}* ∘ χ_{φ(p),ψ(q)} ∘ (τ_p ⊠ τ_q) for any sections
/// p, q. `fused` holds the fibrewise fusion Mod(P)_x ⊠ Mod(Q)_x.
struct ModMonoidality {
  std::vector<Fusion> fused;
  std::vector<Intertwiner> maps;
};

/// Throws if the result depends on the section choice (all sections are
/// swept when fibres have at most max_section_sweep points).
ModMonoidality mod_monoidality(const ModBundle& mp, const ModBundle& mq,
                               const TensorBundle& t, const ModBundle& mt,
                               Tolerance tol = default_tolerance(),
                               int max_section_sweep = 8);

/// 2-Hilbert bundle: bimodules over Y^[2] and a fibrewise product over
/// Y^[3], coherent over Y^[4]. mu[v] maps
/// fuse(m[pr₂₃(v)], m[pr₁₂(v)]).module → m[pr₁₃(v)].
struct TwoVectorBundle {
  Cover cover;
  const StarAlgebra* algebra = nullptr;
  std::vector<Bimodule> m;   // per Y^[2] point
  std::vector<CMatrix> mu;   // per Y^[3] point
};

/// Fibrewise unitary-intertwiner property of mu over Y^[3] plus the
/// coherence square over Y^[4] (against the canonical fusion associator).
Report check_two_vector_bundle(const TwoVectorBundle& v,
                               Tolerance tol = default_tolerance());

/// The associated 2-Hilbert bundle 𝒬 ×_𝒢 A: Mod of the gerbe's bundle over
/// Y^[2]; the product over Y^[3] is Mod(μ) composed with the monoidality
/// intertwiner.
TwoVectorBundle associate(const BundleGerbe& q, const Representation& rep,
                          Tolerance tol = default_tolerance(),
                          int max_section_sweep = 8);

/// Refinement (ρ, φ, u): a map of covers over the same base, a fibrewise
/// *-automorphism family, and fibrewise twisted intertwiners
/// u_y: ℳ_y → ℳ′_{ρ²(y)} along (φ at the second coordinate, φ at the
/// first), compatible with the products over Y^[3].
struct Refinement {
  const TwoVectorBundle* source = nullptr;  // V over Y
  const TwoVectorBundle* target = nullptr;  // V' over Y'
  std::vector<int> rho;                     // Y -> Y'
  std::vector<Automorphism> phi;            // per Y point
  std::vector<CMatrix> u;                   // per Y^[2] point
};

Report check_refinement(const Refinement& r,
                        Tolerance tol = default_tolerance());

/// The identity refinement of a 2-vector bundle.
Refinement identity_refinement(const TwoVectorBundle& v);

}  // namespace gerbel
