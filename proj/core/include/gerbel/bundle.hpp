#pragma once

#include <map>
#include <vector>

#include "gerbel/twogroup.hpp"

namespace gerbel {

/// Finite discrete space: just a point count; points are indices.
struct FiniteSpace {
  int points = 0;
};

/// Surjection Y → X, the finite analog of a locally split cover.
struct Cover {
  FiniteSpace total;
  FiniteSpace base;
  std::vector<int> proj;  // Y index -> X index
};

Report check_cover(const Cover& c);

/// k-fold fibre product Y^[k]: tuples of Y-points with equal base image.
class FibreProduct {
 public:
  FibreProduct(const Cover& cover, int k);

  int size() const { return static_cast<int>(points_.size()); }
  int arity() const { return k_; }
  const std::vector<int>& point(int idx) const { return points_[idx]; }
  int index_of(const std::vector<int>& tuple) const;
  /// Base point under any (hence every) coordinate.
  int base_of(int idx) const;

  /// pr_I: index in Y^[k] -> index in Y^[|I|] (I zero-based coordinates).
  int project(int idx, const std::vector<int>& coords,
              const FibreProduct& target) const;

  /// project applied to every point, as a lookup table.
  std::vector<int> projection_table(const FibreProduct& target,
                                    const std::vector<int>& coords) const;

 private:
  int k_;
  std::vector<std::vector<int>> points_;
  std::vector<int> base_;
  std::map<std::vector<int>, int> index_;
};

/// Principal G-bundle over a finite space: total set with projection and a
/// fibrewise free transitive right action.
struct PrincipalBundle {
  const FiniteGroup* group = nullptr;
  FiniteSpace base;
  int total = 0;
  std::vector<int> proj;                   // total -> base
  std::vector<std::vector<int>> action;    // action[p][g] in total

  int act(int p, int g) const { return action[p][g]; }
  /// Points of the fibre over x, increasing index order.
  std::vector<int> fibre(int x) const;
  /// Trivial bundle X × G.
  static PrincipalBundle trivial(const FiniteGroup& g, FiniteSpace base);
};

Report check_principal_bundle(const PrincipalBundle& p);

/// Isomorphism/morphism data of principal bundles over the same base:
/// equivariant fibre-preserving map of totals.
struct BundleMorphism {
  const PrincipalBundle* source = nullptr;
  const PrincipalBundle* target = nullptr;
  std::vector<int> map;  // source total -> target total
};

Report check_bundle_morphism(const BundleMorphism& f);

/// Principal 2-group bundle: a principal 𝒢_s-bundle with an anchor
/// φ: total → 𝒢₀ satisfying φ(p·h) = t(h)⁻¹·φ(p).
struct PrincipalTwoBundle {
  const TwoGroup* twogroup = nullptr;
  const CrossedModuleOfTwoGroup* crossed = nullptr;  // derived data of *twogroup
  PrincipalBundle underlying;  // structure group = crossed->cm.H
  std::vector<int> anchor;     // total -> G0 index

  static PrincipalTwoBundle trivial(const TwoGroup& g,
                                    const CrossedModuleOfTwoGroup& crossed,
                                    FiniteSpace base);
};

Report check_principal_two_bundle(const PrincipalTwoBundle& p);

/// Anchor-preserving morphism of 2-group bundles.
struct TwoBundleMorphism {
  const PrincipalTwoBundle* source = nullptr;
  const PrincipalTwoBundle* target = nullptr;
  std::vector<int> map;
};

Report check_two_bundle_morphism(const TwoBundleMorphism& f);

/// Tensor product of principal 2-group bundles: quotient of the fibrewise
/// pairs by h·(p₁,p₂) = (p₁h⁻¹, p₂·α(φ₁(p₁)⁻¹,h)), right action on the first
/// slot, anchor φ₁(p₁)·φ₂(p₂). Also exposes the class map for pairs.
struct TensorBundle {
  PrincipalTwoBundle bundle;
  /// class_of[p1][p2] = index in bundle.underlying total.
  std::vector<std::vector<int>> class_of;
  /// Canonical (lowest lexicographic) representative pair per class.
  std::vector<std::pair<int, int>> representative;
};

TensorBundle tensor(const PrincipalTwoBundle& p1, const PrincipalTwoBundle& p2);

/// Bundle extension f_*(P) = (P × H)/G along a group homomorphism.
struct ExtendedBundle {
  PrincipalBundle bundle;
  std::vector<std::vector<int>> class_of;  // [p][h] -> total index
  std::vector<std::pair<int, int>> representative;
};

ExtendedBundle extend_group(const PrincipalBundle& p, const GroupHom& f);

/// Extension of a 2-group bundle along a 2-group homomorphism, with the
/// anchor [p,h] ↦ t(h)⁻¹·F₀(φ(p)).
struct ExtendedTwoBundle {
  PrincipalTwoBundle bundle;
  std::vector<std::vector<int>> class_of;  // [p][h in H_s] -> total index
  std::vector<std::pair<int, int>> representative;
};

ExtendedTwoBundle extend_two_group(const PrincipalTwoBundle& p, const TwoGroupHom& f,
                                   const CrossedModuleOfTwoGroup& target_crossed);

/// The ψ monoidality map tensor(F_*(P₁), F_*(P₂)) → F_*(P₁⊗P₂) on total
/// spaces, ψ((p₁,h₁) ⊗ (p₂,h₂)) = ((p₁,p₂), α(F(φ₁(p₁)),h₂)·h₁). All the
/// materialized pieces are supplied by the caller; the result is a total
/// map suitable for a TwoBundleMorphism.
std::vector<int> psi_monoidality(const ExtendedTwoBundle& e1,
                                 const ExtendedTwoBundle& e2,
                                 const TensorBundle& ext_tensor,
                                 const PrincipalTwoBundle& p1,
                                 const TensorBundle& orig_tensor,
                                 const ExtendedTwoBundle& ext_of_tensor,
                                 const TwoGroupHom& f,
                                 const CrossedModuleOfTwoGroup& target_crossed);

/// Pullback of a 2-group bundle along a map of finite base spaces.
struct PulledBackTwoBundle {
  PrincipalTwoBundle bundle;
  /// pullback total index -> (new base point, old total index)
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> index;  // [new base][old total] -> idx or -1
};

PulledBackTwoBundle pullback(const PrincipalTwoBundle& p, FiniteSpace new_base,
                             const std::vector<int>& base_map);

}  // namespace gerbel
