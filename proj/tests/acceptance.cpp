// Acceptance suite: one pass/fail line per top-level requirement, with
// runtimes. Exits 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gerbel/carriers.hpp"
#include "gerbel/scenario.hpp"

using namespace gerbel;

namespace {

int failures = 0;
const Tolerance kTol{1e-9};

void criterion(const std::string& name, double budget_secs,
               const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body();
  } catch (const std::exception& e) {
    detail = std::string(" (") + e.what() + ")";
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (secs > budget_secs) {
    ok = false;
    detail += " (over time budget)";
  }
  std::printf("[%s] %-34s (%.2fs)%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              secs, detail.c_str());
  if (!ok) ++failures;
}

// Exhaustive composition calculus on one 2-group: associativity, units,
// inverses and the interchange law, plus commuting kernels.
bool two_group_calculus(const TwoGroup& g) {
  if (!check_two_group(g).ok()) return false;
  const int n = g.G1.order();
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.s[x] == g.t[y]) comp[x][y] = compose(g, x, y);
  for (int x = 0; x < n; ++x) {
    if (comp[x][g.i[g.s[x]]] != x) return false;
    if (comp[g.i[g.t[x]]][x] != x) return false;
    int xi = invert2(g, x);
    if (comp[x][xi] != g.i[g.t[x]] || comp[xi][x] != g.i[g.s[x]])
      return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (comp[x][y] < 0) continue;
      for (int z = 0; z < n; ++z) {
        if (comp[y][z] < 0) continue;
        if (comp[comp[x][y]][z] != comp[x][comp[y][z]]) return false;
      }
    }
  // Interchange: (x o y)(z o w) = (xz) o (yw) for composable columns.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (comp[x][y] < 0) continue;
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          if (comp[z][w] < 0) continue;
          if (g.G1.mul(comp[x][y], comp[z][w]) !=
              comp[g.G1.mul(x, z)][g.G1.mul(y, w)])
            return false;
        }
    }
  for (int a : kernel_s(g))
    for (int b : kernel_t(g))
      if (g.G1.mul(a, b) != g.G1.mul(b, a)) return false;
  return true;
}

// Round trip crossed module -> 2-group -> crossed module -> 2-group; the
// canonical witness (h, g) |-> embed(h) * i(g) must be a 2-group
// isomorphism onto the original.
bool round_trip_iso(const CrossedModule& cm) {
  TwoGroup g = two_group_from_crossed_module(cm);
  CrossedModuleOfTwoGroup back = crossed_module_from_two_group(g);
  if (!check_crossed_module(back.cm).ok()) return false;
  TwoGroup g2 = two_group_from_crossed_module(back.cm);
  const int n = g.G1.order();
  if (g2.G1.order() != n || g2.G0.order() != g.G0.order()) return false;
  std::vector<int> w(n), seen(n, 0);
  for (int h = 0; h < back.cm.H.order(); ++h)
    for (int a = 0; a < back.cm.G.order(); ++a) {
      int idx = semidirect_index(back.cm, h, a);
      w[idx] = g.G1.mul(back.embed[h], g.i[a]);
      ++seen[w[idx]];
    }
  for (int c : seen)
    if (c != 1) return false;
  for (int x = 0; x < n; ++x) {
    if (g.s[w[x]] != g2.s[x] || g.t[w[x]] != g2.t[x]) return false;
    for (int y = 0; y < n; ++y)
      if (w[g2.G1.mul(x, y)] != g.G1.mul(w[x], w[y])) return false;
  }
  for (int a = 0; a < g.G0.order(); ++a)
    if (w[g2.i[a]] != g.i[a]) return false;
  return true;
}

std::vector<const StarAlgebra*> shipped_algebras(StarAlgebra& a2,
                                                 StarAlgebra& a3,
                                                 StarAlgebra& a21) {
  return {&a2, &a3, &a21};
}

UACarrier carrier_m2(const StarAlgebra& a) {
  return carriers::involution_carrier(a, carriers::pauli_x(a));
}

bool tensor_witness_ok(const PrincipalTwoBundle& p,
                       const FiniteGroup& h_group) {
  // Associativity witness on representatives.
  TensorBundle t12 = tensor(p, p), t23 = tensor(p, p);
  TensorBundle t12_3 = tensor(t12.bundle, p), t1_23 = tensor(p, t23.bundle);
  std::vector<int> w(t12_3.bundle.underlying.total);
  std::vector<int> seen(w.size(), 0);
  for (std::size_t c = 0; c < w.size(); ++c) {
    auto [q12, p3] = t12_3.representative[c];
    auto [p1, p2] = t12.representative[q12];
    w[c] = t1_23.class_of[p1][t23.class_of[p2][p3]];
    ++seen[w[c]];
  }
  for (int cnt : seen)
    if (cnt != 1) return false;
  TwoBundleMorphism ma{&t12_3.bundle, &t1_23.bundle, w};
  if (!check_two_bundle_morphism(ma).ok()) return false;

  // Unit witnesses against the trivial bundle over the same base.
  PrincipalTwoBundle triv = PrincipalTwoBundle::trivial(
      *p.twogroup, *p.crossed, p.underlying.base);
  for (bool right : {true, false}) {
    TensorBundle t = right ? tensor(p, triv) : tensor(triv, p);
    std::vector<int> wu(t.bundle.underlying.total);
    for (std::size_t c = 0; c < wu.size(); ++c) {
      auto [x1, x2] = t.representative[c];
      int pp = right ? x1 : x2;
      int tau = right ? x2 : x1;
      wu[c] = p.underlying.act(pp, tau % h_group.order());
    }
    TwoBundleMorphism mu{&t.bundle, &p, wu};
    if (!check_two_bundle_morphism(mu).ok()) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion("2group-calculus", 5.0, [] {
    std::vector<CrossedModule> cms;
    cms.push_back(carriers::inner(FiniteGroup::symmetric3()));
    cms.push_back(carriers::central_z4_z2());
    cms.push_back(carriers::inner(FiniteGroup::product(
        FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))));
    cms.push_back(carriers::discrete(FiniteGroup::cyclic(4)));
    for (const CrossedModule& cm : cms) {
      if (!check_crossed_module(cm).ok()) return false;
      TwoGroup g = two_group_from_crossed_module(cm);
      if (g.G1.order() > 256) return false;
      if (!two_group_calculus(g)) return false;
      if (!round_trip_iso(cm)) return false;
    }
    StarAlgebra a2 = carriers::m2();
    if (!two_group_calculus(build_UA(carrier_m2(a2), kTol))) return false;
    StarAlgebra a3 = carriers::m3();
    return two_group_calculus(
        build_UA(carriers::cyclic_carrier(a3, carriers::cyclic_shift(a3), 3), kTol));
  });

  criterion("standard-bimodule-identities", 5.0, [] {
    StarAlgebra a2 = carriers::m2(), a3 = carriers::m3(),
                a21 = carriers::m2_plus_m1();
    for (const StarAlgebra* a : shipped_algebras(a2, a3, a21)) {
      CMatrix s = a->conj_matrix();
      if (!approx_equal(s * s.conjugate(),
                        CMatrix::Identity(a->dim(), a->dim()), kTol))
        return false;
      // xi |> a = J(a* <| J xi) on the full basis: R_a = J L_{a*} J.
      for (const AlgebraElement& e : a->basis()) {
        CMatrix lhs = a->right_mult_matrix(e);
        CMatrix rhs = s * (a->left_mult_matrix(a->star(e)) *
                           (s.conjugate())).conjugate();
        if (!approx_equal(lhs, rhs, kTol)) return false;
      }
    }
    // t(U) = s(JUJ) for all carrier NElements; canonical implementation is
    // a homomorphic section of s and t.
    UACarrier c = carrier_m2(a2);
    for (const NElement& n : c.morphisms) {
      NElement jnj = conjugate_by_modular(n, kTol);
      auto [tu, su] = source_target(n, kTol);
      auto [tj, sj] = source_target(jnj, kTol);
      if (!sj.approx(tu, kTol) || !tj.approx(su, kTol)) return false;
    }
    for (const Automorphism& t1 : c.objects)
      for (const Automorphism& t2 : c.objects) {
        NElement l1 = canonical_implementation(t1, kTol);
        NElement l2 = canonical_implementation(t2, kTol);
        NElement l12 = canonical_implementation(t1.compose(t2), kTol);
        if (!approx_equal(l1.u * l2.u, l12.u, kTol)) return false;
        auto [tt, ss] = source_target(l1, kTol);
        if (!tt.approx(t1, kTol) || !ss.approx(t1, kTol)) return false;
      }
    return true;
  });

  criterion("fusion-engine-chi", 10.0, [] {
    StarAlgebra a2 = carriers::m2(), a3 = carriers::m3(),
                a21 = carriers::m2_plus_m1();
    for (const StarAlgebra* a : shipped_algebras(a2, a3, a21)) {
      Bimodule st = standard_bimodule(*a);
      Fusion f = fuse(st, st, kTol);
      if (f.module.dim != a->dim()) return false;
      Automorphism id = Automorphism::identity(*a);
      Intertwiner c = chi(*a, id, id, f, kTol);
      if (!check_intertwiner(c, true, kTol).ok()) return false;
      // chi equals both unitors when the twists are trivial.
      if (!approx_equal(c.u, left_unitor(f, st, kTol).u, kTol)) return false;
      if (!approx_equal(c.u, right_unitor(f, st, kTol).u, kTol)) return false;
    }
    // chi equals the unitor when one twist is the identity (nontrivial
    // other twist).
    Automorphism id2 = Automorphism::identity(a2);
    Automorphism ad = Automorphism::inner(a2, carriers::pauli_x(a2), kTol);
    Bimodule tw = twisted_standard(a2, ad);
    Fusion fl = fuse(standard_bimodule(a2), tw, kTol);
    if (!approx_equal(chi(a2, id2, ad, fl, kTol).u,
                      left_unitor(fl, tw, kTol).u, kTol))
      return false;
    Fusion fr = fuse(tw, standard_bimodule(a2), kTol);
    if (!approx_equal(chi(a2, ad, id2, fr, kTol).u,
                      right_unitor(fr, tw, kTol).u, kTol))
      return false;
    // Naturality square over every pair of carrier elements: the vertical
    // map is T of the product morphism.
    UACarrier c = carrier_m2(a2);
    for (const NElement& u1 : c.morphisms)
      for (const NElement& u2 : c.morphisms) {
        Fusion fs = fuse(twisted_standard(a2, u1.theta2),
                         twisted_standard(a2, u2.theta2), kTol);
        Fusion ft = fuse(twisted_standard(a2, u1.theta1),
                         twisted_standard(a2, u2.theta1), kTol);
        Intertwiner chs = chi(a2, u1.theta2, u2.theta2, fs, kTol);
        Intertwiner cht = chi(a2, u1.theta1, u2.theta1, ft, kTol);
        Intertwiner both = fuse_intertwiners(functor_T(u1, kTol),
                                             functor_T(u2, kTol), fs, ft, kTol);
        NElement prod{u1.theta1.compose(u2.theta1), u1.u * u2.u,
                      u1.theta2.compose(u2.theta2)};
        CMatrix vert = functor_T(prod, kTol).u;
        if (max_abs_diff(cht.u * both.u, vert * chs.u) > kTol.eps)
          return false;
      }
    // Associativity against the canonical associator.
    Bimodule m = tw;
    TripleFusion t = fuse_triple(m, m, m, kTol);
    Automorphism ad2 = ad.compose(ad);
    Intertwiner c12 = chi(a2, ad, ad, t.hk, kTol);
    Intertwiner c23 = chi(a2, ad, ad, t.kl, kTol);
    Fusion f12_3 = fuse(c12.target, m, kTol);
    Fusion f1_23 = fuse(m, c23.target, kTol);
    CMatrix lhs =
        chi(a2, ad2, ad, f12_3, kTol).u *
        fuse_intertwiners(c12, Intertwiner::identity(m), t.hk_l, f12_3, kTol).u;
    CMatrix rhs =
        chi(a2, ad, ad2, f1_23, kTol).u *
        fuse_intertwiners(Intertwiner::identity(m), c23, t.h_kl, f1_23, kTol).u *
        t.assoc.u;
    return max_abs_diff(lhs, rhs) <= kTol.eps;
  });

  criterion("functor-T", 5.0, [] {
    StarAlgebra a2 = carriers::m2(), a3 = carriers::m3();
    std::vector<UACarrier> cs;
    cs.push_back(carrier_m2(a2));
    cs.push_back(carriers::cyclic_carrier(a3, carriers::cyclic_shift(a3), 3));
    for (const UACarrier& c : cs) {
      const StarAlgebra& a = *c.algebra;
      for (const Automorphism& th : c.objects) {
        Intertwiner ti = functor_T(canonical_implementation(th, kTol), kTol);
        if (!approx_equal(ti.u, CMatrix::Identity(a.dim(), a.dim()), kTol))
          return false;
      }
      for (const NElement& u : c.morphisms) {
        Intertwiner tu = functor_T(u, kTol);
        if (!check_intertwiner(tu, true, kTol).ok()) return false;
        for (const NElement& v : c.morphisms) {
          if (!u.theta2.approx(v.theta1, kTol)) continue;
          NElement uv = compose_in_UA(u, v, kTol);
          if (!approx_equal(functor_T(uv, kTol).u,
                            tu.u * functor_T(v, kTol).u, kTol))
            return false;
        }
      }
    }
    return true;
  });

  criterion("principal-2-bundles", 10.0, [] {
    carriers::CentralExtensionScenario s;
    PrincipalTwoBundle p =
        PrincipalTwoBundle::trivial(s.group, s.crossed, FiniteSpace{2});
    if (!check_principal_two_bundle(p).ok()) return false;
    TensorBundle t = tensor(p, p);
    if (!check_principal_two_bundle(t.bundle).ok()) return false;
    // Anchor formula on every class representative.
    for (int c = 0; c < t.bundle.underlying.total; ++c) {
      auto [p1, p2] = t.representative[c];
      if (t.bundle.anchor[c] != s.group.G0.mul(p.anchor[p1], p.anchor[p2]))
        return false;
    }
    if (!tensor_witness_ok(p, s.crossed.cm.H)) return false;
    // Monoidality of extension along the quotient hom.
    TwoGroupHom f = s.quotient_hom();
    const CrossedModuleOfTwoGroup& tc = s.quotient_crossed();
    ExtendedTwoBundle e1 = extend_two_group(p, f, tc);
    ExtendedTwoBundle e2 = extend_two_group(p, f, tc);
    if (!check_principal_two_bundle(e1.bundle).ok()) return false;
    TensorBundle ext_tensor = tensor(e1.bundle, e2.bundle);
    ExtendedTwoBundle ext_of_tensor = extend_two_group(t.bundle, f, tc);
    std::vector<int> psi = psi_monoidality(e1, e2, ext_tensor, p, t,
                                           ext_of_tensor, f, tc);
    TwoBundleMorphism mpsi{&ext_tensor.bundle, &ext_of_tensor.bundle, psi};
    if (!check_two_bundle_morphism(mpsi).ok()) return false;
    std::vector<int> seen(psi.size(), 0);
    for (int x : psi) ++seen[x];
    for (int c : seen)
      if (c != 1) return false;
    return true;
  });

  criterion("gerbes", 15.0, [] {
    carriers::CentralExtensionScenario s;
    if (!check_gerbe(trivial_gerbe(s.cover, s.group, s.crossed)).ok())
      return false;
    BundleGerbe q = s.make_gerbe();
    if (!check_gerbe(q).ok()) return false;
    // Every fibrewise corruption of mu is detected over Y^[4].
    for (int y3 = 0; y3 < q.y3().size(); ++y3) {
      Report r = check_gerbe(s.make_corrupted_gerbe(y3));
      if (r.ok()) return false;
      bool y4 = false;
      for (const Violation& v : r.violations())
        if (v.location.find("Y^[4]") != std::string::npos) y4 = true;
      if (!y4) return false;
    }
    return check_gerbe(extend_gerbe(q, s.quotient_hom(), s.quotient_crossed()))
        .ok();
  });

  criterion("associated-construction", 30.0, [] {
    carriers::CentralExtensionScenario s;
    // Section independence of Mod monoidality: all 16 section pairs.
    PrincipalTwoBundle p =
        PrincipalTwoBundle::trivial(s.group, s.crossed, FiniteSpace{2});
    TensorBundle t = tensor(p, p);
    ModBundle mp = mod_of_bundle(p, s.rep, kTol);
    ModBundle mt = mod_of_bundle(t.bundle, s.rep, kTol);
    ModMonoidality mm = mod_monoidality(mp, mp, t, mt, kTol, 16);
    for (const Intertwiner& it : mm.maps)
      if (!check_intertwiner(it, true, kTol).ok()) return false;
    // associate on the central-extension scenario: coherent, fibre dims.
    TwoVectorBundle v = associate(s.make_gerbe(), s.rep, kTol);
    for (const Bimodule& m : v.m)
      if (m.dim != s.algebra.dim()) return false;
    if (!check_two_vector_bundle(v, kTol).ok()) return false;
    // Double quotient vs single quotient: canonical identification is a
    // 2-bundle isomorphism compatible with both products.
    BundleGerbe once =
        extend_gerbe(s.make_gerbe(), s.quotient_hom(), s.quotient_crossed());
    const TwoGroup& qg = s.quotient_group();
    TwoGroupHom idhom{&qg, &qg, {}, {}};
    for (int i = 0; i < qg.G0.order(); ++i) idhom.F0.push_back(i);
    for (int i = 0; i < qg.G1.order(); ++i) idhom.F1.push_back(i);
    BundleGerbe twice = extend_gerbe(once, idhom, s.quotient_crossed());
    ExtendedTwoBundle ext =
        extend_two_group(once.p(), idhom, s.quotient_crossed());
    int idH = s.quotient_crossed().cm.H.id();
    std::vector<int> iso(once.p().underlying.total);
    for (std::size_t x = 0; x < iso.size(); ++x) iso[x] = ext.class_of[x][idH];
    TwoBundleMorphism mi{&once.p(), &twice.p(), iso};
    if (!check_two_bundle_morphism(mi).ok()) return false;
    for (int y = 0; y < once.y3().size(); ++y) {
      int y23 = once.y3().project(y, {1, 2}, once.y2());
      int y12 = once.y3().project(y, {0, 1}, once.y2());
      for (int a = 0; a < once.p().underlying.total; ++a) {
        if (once.p().underlying.proj[a] != y23) continue;
        for (int b = 0; b < once.p().underlying.total; ++b) {
          if (once.p().underlying.proj[b] != y12) continue;
          if (iso[once.apply_mu(y, a, b)] != twice.apply_mu(y, iso[a], iso[b]))
            return false;
        }
      }
    }
    return true;
  });

  criterion("refinement-verifier", 60.0, [] {
    carriers::CentralExtensionScenario s;
    std::vector<TwoVectorBundle> shipped;
    shipped.push_back(associate(trivial_gerbe(s.cover, s.group, s.crossed),
                                s.rep, kTol));
    shipped.push_back(associate(s.make_gerbe(), s.rep, kTol));
    for (const TwoVectorBundle& v : shipped)
      if (!check_refinement(identity_refinement(v), kTol).ok()) return false;
    // Cover-refinement-induced refinement between two associate outputs.
    BundleGerbe q = s.make_gerbe();
    Cover finer{FiniteSpace{12}, FiniteSpace{2}, {}};
    std::vector<int> rmap;
    for (int i = 0; i < 12; ++i) {
      finer.proj.push_back(i / 6);
      rmap.push_back((i % 6) / 2 + 3 * (i / 6));
    }
    TwoVectorBundle v = shipped[1];
    TwoVectorBundle vp = associate(pullback_gerbe(q, finer, rmap), s.rep, kTol);
    Refinement induced;
    induced.source = &vp;
    induced.target = &v;
    induced.rho = rmap;
    for (int i = 0; i < 12; ++i)
      induced.phi.push_back(Automorphism::identity(s.algebra));
    FibreProduct fy2(finer, 2);
    for (int i = 0; i < fy2.size(); ++i)
      induced.u.push_back(CMatrix::Identity(vp.m[i].dim, vp.m[i].dim));
    if (!check_refinement(induced, kTol).ok()) return false;
    // 20 randomized single-point corruptions of u, phi or mu, all rejected
    // with a located violation.
    Refinement base = identity_refinement(v);
    std::mt19937 rng(20260826);
    for (int trial = 0; trial < 20; ++trial) {
      TwoVectorBundle vbad = v;
      Refinement r = base;
      int which = static_cast<int>(rng() % 3);
      if (which == 0) {
        int y2 = static_cast<int>(rng() % r.u.size());
        r.u[y2](static_cast<int>(rng() % r.u[y2].rows()),
                static_cast<int>(rng() % r.u[y2].cols())) += Complex(0.4, 0.2);
      } else if (which == 1) {
        r.phi[rng() % r.phi.size()] =
            Automorphism::inner(s.algebra, carriers::pauli_z(s.algebra), kTol);
      } else {
        int y3 = static_cast<int>(rng() % vbad.mu.size());
        vbad.mu[y3](static_cast<int>(rng() % vbad.mu[y3].rows()),
                    static_cast<int>(rng() % vbad.mu[y3].cols())) +=
            Complex(0.3, -0.1);
        // Compare the corrupted product against the intact target.
        r.source = &vbad;
      }
      Report rep = check_refinement(r, kTol);
      if (rep.ok()) return false;
      for (const Violation& viol : rep.violations())
        if (viol.location.empty()) return false;
    }
    return true;
  });

  if (failures == 0) std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
