#pragma once

#include <optional>
#include <vector>

#include "gerbel/group.hpp"

namespace gerbel {

/// Crossed module t: H -> G with a left G-action on H by automorphisms,
/// subject to equivariance and the Peiffer identity.
struct CrossedModule {
  FiniteGroup G;
  FiniteGroup H;
  std::vector<int> t;                   // H -> G
  std::vector<std::vector<int>> alpha;  // alpha[g][h] in H

  int act(int g, int h) const { return alpha[g][h]; }
};

/// Strict 2-group: object group G0, morphism group G1, structure
/// homomorphisms s, t: G1 -> G0 and i: G0 -> G1. Composition and inversion
/// are determined by these maps and are not stored.
struct TwoGroup {
  FiniteGroup G0;
  FiniteGroup G1;
  std::vector<int> s;  // G1 -> G0
  std::vector<int> t;  // G1 -> G0
  std::vector<int> i;  // G0 -> G1
};

/// Homomorphism of 2-groups: group homomorphisms on objects and morphisms
/// commuting with s, t and i.
struct TwoGroupHom {
  const TwoGroup* source = nullptr;
  const TwoGroup* target = nullptr;
  std::vector<int> F0;  // source.G0 -> target.G0
  std::vector<int> F1;  // source.G1 -> target.G1
};

/// Structural validity of a 2-group: s, t, i homomorphisms, s∘i = t∘i = id,
/// and ker(s), ker(t) commute elementwise in G1.
Report check_two_group(const TwoGroup& g);

/// Both crossed-module equations, checked for every argument tuple.
Report check_crossed_module(const CrossedModule& cm);

/// All five compatibility conditions of a 2-group homomorphism, plus a spot
/// check that composition is preserved (which the conditions already imply).
Report check_two_group_hom(const TwoGroupHom& f);

/// Composition X ∘ Y = X·i(s(X))⁻¹·Y, defined when s(X) = t(Y).
int compose(const TwoGroup& g, int x, int y);

/// Inversion w.r.t. composition: inv(X) = i(s(X))·X⁻¹·i(t(X)).
int invert2(const TwoGroup& g, int x);

/// G1 = H ⋊_α G with (h,g)(h',g') = (h·α(g,h'), gg'); element index h*|G|+g.
/// Rejects invalid crossed modules with their violation report.
TwoGroup two_group_from_crossed_module(const CrossedModule& cm);

/// Index helpers for the semidirect-product convention above.
inline int semidirect_index(const CrossedModule& cm, int h, int g) {
  return h * cm.G.order() + g;
}

/// The crossed module (ker(s), G0, t|ker(s), conjugation by i(g)) of a valid
/// 2-group. Also returns the embedding ker(s) -> G1.
struct CrossedModuleOfTwoGroup {
  CrossedModule cm;
  std::vector<int> embed;  // ker(s) index -> G1 index
  std::vector<int> project;  // G1 index -> ker(s) index or -1
};
CrossedModuleOfTwoGroup crossed_module_from_two_group(const TwoGroup& g);

/// Elements of ker(s) in G1, in increasing index order.
std::vector<int> kernel_s(const TwoGroup& g);
std::vector<int> kernel_t(const TwoGroup& g);

}  // namespace gerbel
