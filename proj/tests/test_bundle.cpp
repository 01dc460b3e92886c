#include <doctest.h>

#include "gerbel/carriers.hpp"

using namespace gerbel;

namespace {

struct Setup {
  carriers::CentralExtensionScenario s;
  const TwoGroup& g() { return s.group; }
  const CrossedModuleOfTwoGroup& cx() { return s.crossed; }
};

}  // namespace

TEST_CASE("covers and fibre products") {
  Cover c = carriers::three_sheet_cover();
  CHECK(check_cover(c).ok());
  FibreProduct y2(c, 2);
  FibreProduct y3(c, 3);
  // 3 sheets over point 0, iso 1 fibre over point 1 of size 3: wait, the
  // cover is 6 total over 2 base points, 3 sheets each.
  CHECK(y2.size() == 9 + 9);
  CHECK(y3.size() == 27 + 27);
  // Projections commute with indexing.
  for (int i = 0; i < y3.size(); ++i) {
    const std::vector<int>& p = y3.point(i);
    int idx12 = y3.project(i, {0, 1}, y2);
    CHECK(y2.point(idx12) == std::vector<int>{p[0], p[1]});
  }
  Cover broken{FiniteSpace{3}, FiniteSpace{2}, {0, 0, 0}};
  CHECK_FALSE(check_cover(broken).ok());
}

TEST_CASE("trivial principal 2-bundle passes all axioms") {
  Setup u;
  PrincipalTwoBundle p =
      PrincipalTwoBundle::trivial(u.g(), u.cx(), FiniteSpace{3});
  CHECK(check_principal_bundle(p.underlying).ok());
  CHECK(check_principal_two_bundle(p).ok());
  SUBCASE("corrupting the anchor is detected") {
    p.anchor[0] = 1 - p.anchor[0];
    CHECK_FALSE(check_principal_two_bundle(p).ok());
  }
  SUBCASE("breaking freeness is detected") {
    p.underlying.action[0][1] = p.underlying.action[0][0];
    CHECK_FALSE(check_principal_bundle(p.underlying).ok());
  }
}

TEST_CASE("tensor product of 2-bundles") {
  Setup u;
  PrincipalTwoBundle p =
      PrincipalTwoBundle::trivial(u.g(), u.cx(), FiniteSpace{2});
  TensorBundle t = tensor(p, p);
  CHECK(check_principal_two_bundle(t.bundle).ok());
  // Fibre count: |H| classes per base point.
  CHECK(t.bundle.underlying.total == 2 * u.cx().cm.H.order());
  // Anchor is the product of anchors on representatives.
  for (int c = 0; c < t.bundle.underlying.total; ++c) {
    auto [p1, p2] = t.representative[c];
    CHECK(t.bundle.anchor[c] ==
          u.g().G0.mul(p.anchor[p1], p.anchor[p2]));
  }
}

TEST_CASE("extension of a 2-bundle along the quotient hom") {
  Setup u;
  PrincipalTwoBundle p =
      PrincipalTwoBundle::trivial(u.g(), u.cx(), FiniteSpace{2});
  TwoGroupHom f = u.s.quotient_hom();
  ExtendedTwoBundle e = extend_two_group(p, f, u.s.quotient_crossed());
  CHECK(check_principal_two_bundle(e.bundle).ok());
  // Fibres of the extension are torsors over the target kernel group.
  CHECK(e.bundle.underlying.total ==
        2 * u.s.quotient_crossed().cm.H.order());
}

TEST_CASE("extension monoidality psi is an anchored morphism") {
  Setup u;
  PrincipalTwoBundle p =
      PrincipalTwoBundle::trivial(u.g(), u.cx(), FiniteSpace{2});
  TwoGroupHom f = u.s.quotient_hom();
  const CrossedModuleOfTwoGroup& tc = u.s.quotient_crossed();
  ExtendedTwoBundle e1 = extend_two_group(p, f, tc);
  ExtendedTwoBundle e2 = extend_two_group(p, f, tc);
  TensorBundle ext_tensor = tensor(e1.bundle, e2.bundle);
  TensorBundle orig_tensor = tensor(p, p);
  ExtendedTwoBundle ext_of_tensor = extend_two_group(orig_tensor.bundle, f, tc);
  std::vector<int> psi = psi_monoidality(e1, e2, ext_tensor, p, orig_tensor,
                                         ext_of_tensor, f, tc);
  TwoBundleMorphism m{&ext_tensor.bundle, &ext_of_tensor.bundle, psi};
  CHECK(check_two_bundle_morphism(m).ok());
  // Exhaustive bijectivity on this small total space.
  std::vector<int> seen(psi.size(), 0);
  for (int x : psi) ++seen[x];
  for (int c : seen) CHECK(c == 1);
}

TEST_CASE("pullback of 2-bundles along a base map") {
  Setup u;
  PrincipalTwoBundle p =
      PrincipalTwoBundle::trivial(u.g(), u.cx(), FiniteSpace{2});
  std::vector<int> base_map = {0, 1, 1, 0};
  PulledBackTwoBundle pb = pullback(p, FiniteSpace{4}, base_map);
  CHECK(check_principal_two_bundle(pb.bundle).ok());
  CHECK(pb.bundle.underlying.total == 2 * p.underlying.total);
  for (std::size_t i = 0; i < pb.pairs.size(); ++i) {
    auto [nb, old] = pb.pairs[i];
    CHECK(pb.bundle.anchor[i] == p.anchor[old]);
    CHECK(p.underlying.proj[old] == base_map[nb]);
  }
}

TEST_CASE("nontrivial double cover style extension example") {
  // Z/4 -> Z/2 reduction as a plain group extension of bundles.
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  GroupHom f(z4, z2, {0, 1, 0, 1});
  PrincipalBundle p = PrincipalBundle::trivial(z4, FiniteSpace{3});
  ExtendedBundle e = extend_group(p, f);
  CHECK(check_principal_bundle(e.bundle).ok());
  CHECK(e.bundle.total == 3 * 2);
}
