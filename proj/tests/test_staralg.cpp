#include <doctest.h>

#include "gerbel/carriers.hpp"

using namespace gerbel;

namespace {
const Tolerance tol{1e-9};
}

TEST_CASE("star algebra basics") {
  StarAlgebra a = carriers::m2_plus_m1();
  CHECK(a.dim() == 5);
  AlgebraElement one = a.one();
  for (const AlgebraElement& e : a.basis()) {
    CHECK(approx_equal(a.vec(a.mul(one, e)), a.vec(e), tol));
    CHECK(approx_equal(a.vec(a.mul(e, one)), a.vec(e), tol));
  }
  // Trace is faithful: gram is positive diagonal.
  CMatrix g = a.gram();
  for (int i = 0; i < a.dim(); ++i) CHECK(g(i, i).real() > 0);
}

TEST_CASE("modular conjugation is an antiunitary involution") {
  for (const StarAlgebra& a :
       {carriers::m2(), carriers::m3(), carriers::m2_plus_m1()}) {
    CMatrix s = a.conj_matrix();
    CHECK(approx_equal(s * s.conjugate(), CMatrix::Identity(a.dim(), a.dim()), tol));
    // J intertwines left and right multiplication: J L_a J = R_{a*}.
    for (const AlgebraElement& e : a.basis()) {
      CMatrix l = a.left_mult_matrix(e);
      CMatrix r = a.right_mult_matrix(a.star(e));
      CHECK(approx_equal(s * l.conjugate() * s.conjugate(), r, tol));
    }
  }
}

TEST_CASE("inner automorphisms and canonical implementation") {
  StarAlgebra a = carriers::m2();
  Automorphism ad = Automorphism::inner(a, carriers::pauli_x(a), tol);
  CHECK(ad.is_trace_preserving(tol));
  NElement n = canonical_implementation(ad, tol);
  CHECK(check_n_element(n, tol).ok());
  // L2(theta) commutes with J.
  CMatrix s = a.conj_matrix();
  CHECK(approx_equal(s * n.u.conjugate() * s.conjugate(), n.u, tol));
  // Canonical implementations are units for vertical composition:
  // n o n = L2(theta) (L2(theta))* L2(theta) = n.
  NElement nn = compose_in_UA(n, n, tol);
  CHECK(approx_equal(nn.u, n.u, tol));
}

TEST_CASE("source and target recovered from the unitary") {
  StarAlgebra a = carriers::m2();
  // U = left multiplication by sigma_x: theta1 = Ad_{sigma_x}, theta2 = id.
  AlgebraElement sx = carriers::pauli_x(a);
  Automorphism ad = Automorphism::inner(a, sx, tol);
  NElement n{ad, a.left_mult_matrix(sx), Automorphism::identity(a)};
  CHECK(check_n_element(n, tol).ok());
  auto [t, s] = source_target(n, tol);
  CHECK(t.approx(ad, tol));
  CHECK(s.approx(Automorphism::identity(a), tol));
}

TEST_CASE("modular conjugation swaps source and target") {
  StarAlgebra a = carriers::m2();
  AlgebraElement sx = carriers::pauli_x(a);
  NElement n{Automorphism::inner(a, sx, tol), a.left_mult_matrix(sx),
             Automorphism::identity(a)};
  NElement jnj = conjugate_by_modular(n, tol);
  CHECK(check_n_element(jnj, tol).ok());
  CHECK(jnj.theta1.approx(n.theta2, tol));
  CHECK(jnj.theta2.approx(n.theta1, tol));
}

TEST_CASE("build_UA on the involution carrier") {
  StarAlgebra a = carriers::m2();
  UACarrier c = carriers::involution_carrier(a, carriers::pauli_x(a));
  TwoGroup g = build_UA(c, tol);
  CHECK(g.G0.order() == 2);
  CHECK(g.G1.order() == 8);
  CHECK(check_two_group(g).ok());
  SUBCASE("carrier missing a morphism fails closure") {
    c.morphisms.pop_back();
    CHECK_THROWS_AS(build_UA(c, tol), Error);
  }
}

TEST_CASE("build_UA on a cyclic carrier over M3") {
  StarAlgebra a = carriers::m3();
  TwoGroup g = build_UA(carriers::cyclic_carrier(a, carriers::cyclic_shift(a), 3), tol);
  CHECK(g.G0.order() == 3);
  CHECK(g.G1.order() == 9);
  CHECK(check_two_group(g).ok());
}

TEST_CASE("central extension representation") {
  carriers::CentralExtensionScenario s;
  CHECK(check_representation(s.rep, tol).ok());
  SUBCASE("negating one morphism unitary breaks the homomorphism") {
    Representation bad = s.rep;
    bad.R1[3].u = -bad.R1[3].u;
    CHECK_FALSE(check_representation(bad, tol).ok());
  }
}

TEST_CASE("trivial representation is valid for any 2-group") {
  TwoGroup g = two_group_from_crossed_module(carriers::inner(FiniteGroup::symmetric3()));
  StarAlgebra a = carriers::m2_plus_m1();
  CHECK(check_representation(carriers::trivial_representation(g, a), tol).ok());
}
