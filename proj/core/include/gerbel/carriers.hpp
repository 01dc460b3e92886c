#pragma once

#include <memory>

#include "gerbel/assoc.hpp"
#include "gerbel/gerbe.hpp"

namespace gerbel::carriers {

/// Inner crossed module (G, G, t = id, α = conjugation).
CrossedModule inner(const FiniteGroup& g);

/// Central-extension crossed module t: ℤ/4 → ℤ/2 (reduction mod 2, trivial
/// action).
CrossedModule central_z4_z2();

/// Crossed module with trivial H; its 2-group is the discrete 2-group G_dis.
CrossedModule discrete(const FiniteGroup& g);

/// Shipped algebras.
StarAlgebra m2();
StarAlgebra m3();
StarAlgebra m2_plus_m1();

/// σ_x, σ_y, σ_z placed in the first block (which must be 2×2), zero
/// elsewhere except identity: the off-block part is the identity so the
/// results are unitary.
AlgebraElement pauli_x(const StarAlgebra& a);
AlgebraElement pauli_y(const StarAlgebra& a);
AlgebraElement pauli_z(const StarAlgebra& a);
/// Cyclic-shift unitary in the first block (identity elsewhere).
AlgebraElement cyclic_shift(const StarAlgebra& a);

/// Powers u⁰..u^{n-1} of an algebra element.
AlgebraElement power(const StarAlgebra& a, const AlgebraElement& u, int n);

/// Carrier with G₀ = {id, Ad_u} for a self-adjoint unitary u (u² = 1) and
/// G₁ = {± L_{u^a} R_{u^b}}: eight morphisms.
UACarrier involution_carrier(const StarAlgebra& a, const AlgebraElement& u);

/// Carrier with G₀ = {Ad_{c^k}} and G₁ = {L_{c^a} R_{c^b}} for a unitary c
/// of finite order n (n² morphisms).
UACarrier cyclic_carrier(const StarAlgebra& a, const AlgebraElement& c, int n);

/// The trivial carrier {id}, {id}.
UACarrier trivial_carrier(const StarAlgebra& a);

/// Everything-to-identity representation of any 2-group.
Representation trivial_representation(const TwoGroup& g, const StarAlgebra& a);

/// 3-sheet cover of a 2-point base.
Cover three_sheet_cover();

/// The end-to-end ℤ/4 → ℤ/2 demo scenario: the central-extension 2-group,
/// its representation on M₂ (R₀(1̄) = Ad_{σ_x}, R₁ generated by
/// ξ ↦ iσ_x ξ), and a Čech cocycle over the 3-sheet cover. Addresses are
/// stable: the object is neither copyable nor movable.
class CentralExtensionScenario {
 public:
  CentralExtensionScenario();
  CentralExtensionScenario(const CentralExtensionScenario&) = delete;
  CentralExtensionScenario& operator=(const CentralExtensionScenario&) = delete;

  StarAlgebra algebra;              // M₂
  CrossedModule cm;                 // ℤ/4 → ℤ/2
  TwoGroup group;                   // |G₁| = 8
  CrossedModuleOfTwoGroup crossed;  // ker(s) ≅ ℤ/4
  Representation rep;               // on M₂
  Cover cover;                      // 3 sheets over 2 points
  std::vector<int> g_table;         // cocycle g over Y^[2]
  std::vector<int> h_table;         // cocycle h over Y^[3] (ker(t)-valued)

  BundleGerbe make_gerbe() const;

  /// μ of make_gerbe() corrupted equivariantly over the fibre of one Y^[3]
  /// point (post-composed with the action of a nontrivial ker(t) element),
  /// so it stays a bundle morphism but breaks Y^[4] associativity.
  BundleGerbe make_corrupted_gerbe(int y3_point) const;

  /// The quotient 2-group (inner ℤ/2 crossed module) and the quotient
  /// homomorphism onto it, F₁(h, g) = (h mod 2, g).
  const TwoGroup& quotient_group() const { return *quotient_group_; }
  const CrossedModuleOfTwoGroup& quotient_crossed() const {
    return *quotient_crossed_;
  }
  TwoGroupHom quotient_hom() const;

 private:
  std::unique_ptr<TwoGroup> quotient_group_;
  std::unique_ptr<CrossedModuleOfTwoGroup> quotient_crossed_;
};

}  // namespace gerbel::carriers
