#include "gerbel/assoc.hpp"

#include <string>
#include <utility>

namespace gerbel {

Report check_bimodule_bundle(const BimoduleBundle& m, Tolerance tol) {
  Report report;
  if (static_cast<int>(m.fibres.size()) != m.base.points) {
    report.add("bundle", "one fibre per base point");
    return report;
  }
  for (int x = 0; x < m.base.points; ++x)
    report.merge(check_bimodule(m.fibres[x], tol),
                 "fibre " + std::to_string(x) + ": ");
  return report;
}

CMatrix ModBundle::tau(int point) const {
  return rep->algebra->right_mult_matrix(u_of_h[section_h[point]]);
}

ModBundle mod_of_bundle(const PrincipalTwoBundle& p, const Representation& rep,
                        Tolerance tol) {
  if (p.twogroup != rep.group && !(p.twogroup->G1 == rep.group->G1 &&
                                   p.twogroup->G0 == rep.group->G0))
    throw Error("mod_of_bundle: representation is not of the structure 2-group");
  const StarAlgebra& a = *rep.algebra;
  const CrossedModuleOfTwoGroup& crossed = *p.crossed;
  const FiniteGroup& hg = crossed.cm.H;

  ModBundle out;
  out.p = &p;
  out.rep = &rep;
  out.m.base = p.underlying.base;
  out.m.algebra = &a;

  // u(h): the unitary with R₁(h) = left multiplication by u(h); 𝒢_s = ker(s)
  // acts on L²(A) by honest A-linear maps, which are exactly the left
  // multiplications.
  for (int h = 0; h < hg.order(); ++h) {
    const NElement& n = rep.R1[crossed.embed[h]];
    AlgebraElement u = a.unvec(n.u * a.vec(a.one()));
    if (!a.is_unitary_element(u, tol) ||
        max_abs_diff(a.left_mult_matrix(u), n.u) > tol.eps)
      throw Error("mod_of_bundle: action data not closed in N(A): 𝒢_s element " +
                  std::to_string(h) + " does not act by unitary left "
                  "multiplication");
    out.u_of_h.push_back(std::move(u));
  }
  for (int h1 = 0; h1 < hg.order(); ++h1)
    for (int h2 = 0; h2 < hg.order(); ++h2) {
      double r = max_abs_diff(
          a.vec(a.mul(out.u_of_h[h1], out.u_of_h[h2])),
          a.vec(out.u_of_h[hg.mul(h1, h2)]));
      if (r > tol.eps)
        throw Error("mod_of_bundle: u(h₁)·u(h₂) = u(h₁h₂) fails for (" +
                    std::to_string(h1) + "," + std::to_string(h2) + ")");
    }

  out.section_h.assign(p.underlying.total, -1);
  for (int x = 0; x < p.underlying.base.points; ++x) {
    std::vector<int> fib = p.underlying.fibre(x);
    if (fib.empty()) throw Error("mod_of_bundle: empty fibre");
    int star = fib.front();
    out.base_rep.push_back(star);
    for (int h = 0; h < hg.order(); ++h)
      out.section_h[p.underlying.act(star, h)] = h;
    out.twists.push_back(rep.R0[p.anchor[star]]);
    out.m.fibres.push_back(twisted_standard(a, out.twists.back()));
  }
  for (int h : out.section_h)
    if (h < 0) throw Error("mod_of_bundle: fibre is not a single orbit");

  // Every section trivialization τ_p is a verified unitary intertwiner onto
  // L²(A)_{R₀(φ(p))}; this certifies well-definedness of the actions on
  // classes across all representatives.
  for (int pt = 0; pt < p.underlying.total; ++pt) {
    int x = p.underlying.proj[pt];
    Intertwiner t{out.m.fibres[x], twisted_standard(a, rep.R0[p.anchor[pt]]),
                  out.tau(pt), Automorphism::identity(a),
                  Automorphism::identity(a)};
    check_intertwiner(t, true, tol)
        .require("mod_of_bundle: trivialization at point " + std::to_string(pt));
  }
  return out;
}

std::vector<Intertwiner> mod_of_morphism(const TwoBundleMorphism& f,
                                         const ModBundle& src,
                                         const ModBundle& dst, Tolerance tol) {
  check_two_bundle_morphism(f).require("mod_of_morphism");
  const StarAlgebra& a = *src.rep->algebra;
  const FiniteGroup& hg = dst.p->crossed->cm.H;
  std::vector<Intertwiner> out;
  for (int x = 0; x < src.p->underlying.base.points; ++x) {
    int fp = f.map[src.base_rep[x]];
    int qstar = dst.base_rep[x];
    int h = -1;
    for (int c = 0; c < hg.order(); ++c)
      if (dst.p->underlying.act(qstar, c) == fp) h = c;
    if (h < 0) throw Error("mod_of_morphism: image not in the expected fibre");
    // [p*, ξ] ↦ [f(p*), ξ] = [q*·h, ξ] = [q*, ξ·u(h)⁻¹].
    CMatrix m = a.right_mult_matrix(a.star(dst.u_of_h[h]));
    Intertwiner it{src.fibre(x), dst.fibre(x), std::move(m),
                   Automorphism::identity(a), Automorphism::identity(a)};
    check_intertwiner(it, true, tol)
        .require("mod_of_morphism: base point " + std::to_string(x));
    out.push_back(std::move(it));
  }
  return out;
}

ModMonoidality mod_monoidality(const ModBundle& mp, const ModBundle& mq,
                               const TensorBundle& t, const ModBundle& mt,
                               Tolerance tol, int max_section_sweep) {
  const StarAlgebra& a = *mp.rep->algebra;
  const Representation& rep = *mp.rep;
  ModMonoidality out;
  const int points = mp.p->underlying.base.points;
  for (int x = 0; x < points; ++x) {
    Fusion fu = fuse(mp.fibre(x), mq.fibre(x), tol);
    int pstar = mp.base_rep[x];
    int qstar = mq.base_rep[x];
    Intertwiner ch = chi(a, mp.twists[x], mq.twists[x], fu, tol);
    int cls = t.class_of[pstar][qstar];
    int h = mt.section_h[cls];
    CMatrix m = a.right_mult_matrix(a.star(mt.u_of_h[h])) * ch.u;
    Intertwiner it{fu.module, mt.fibre(x), m, Automorphism::identity(a),
                   Automorphism::identity(a)};
    check_intertwiner(it, true, tol)
        .require("mod_monoidality: base point " + std::to_string(x));

    // Section independence: recompute τ_{p⊗q}* ∘ χ_{φ(p),ψ(q)} ∘ (τ_p ⊠ τ_q)
    // from every pair of sections when the fibres are small enough.
    std::vector<int> fib_p = mp.p->underlying.fibre(x);
    std::vector<int> fib_q = mq.p->underlying.fibre(x);
    if (static_cast<int>(fib_p.size()) <= max_section_sweep &&
        static_cast<int>(fib_q.size()) <= max_section_sweep) {
      for (int pp : fib_p)
        for (int qq : fib_q) {
          Automorphism thp = rep.R0[mp.p->anchor[pp]];
          Automorphism thq = rep.R0[mq.p->anchor[qq]];
          Intertwiner tp{mp.fibre(x), twisted_standard(a, thp), mp.tau(pp),
                         Automorphism::identity(a), Automorphism::identity(a)};
          Intertwiner tq{mq.fibre(x), twisted_standard(a, thq), mq.tau(qq),
                         Automorphism::identity(a), Automorphism::identity(a)};
          Fusion fu2 = fuse(tp.target, tq.target, tol);
          Intertwiner fused = fuse_intertwiners(tp, tq, fu, fu2, tol);
          Intertwiner ch2 = chi(a, thp, thq, fu2, tol);
          int cls2 = t.class_of[pp][qq];
          int h2 = mt.section_h[cls2];
          CMatrix m2 = a.right_mult_matrix(a.star(mt.u_of_h[h2])) * ch2.u *
                       fused.u;
          double r = max_abs_diff(m2, m);
          if (r > tol.eps)
            throw Error("mod_monoidality: section choice (" +
                        std::to_string(pp) + "," + std::to_string(qq) +
                        ") over base point " + std::to_string(x) +
                        " changes the intertwiner (residual " +
                        std::to_string(r) + ")");
        }
    }
    out.fused.push_back(std::move(fu));
    out.maps.push_back(std::move(it));
  }
  return out;
}

TwoVectorBundle associate(const BundleGerbe& q, const Representation& rep,
                          Tolerance tol, int max_section_sweep) {
  ModBundle mod_p = mod_of_bundle(q.p(), rep, tol);
  ModBundle mod23 = mod_of_bundle(q.pb23().bundle, rep, tol);
  ModBundle mod12 = mod_of_bundle(q.pb12().bundle, rep, tol);
  ModBundle mod13 = mod_of_bundle(q.pb13().bundle, rep, tol);
  ModBundle mod_t = mod_of_bundle(q.tensor_bundle().bundle, rep, tol);

  ModMonoidality monoid = mod_monoidality(mod23, mod12, q.tensor_bundle(),
                                          mod_t, tol, max_section_sweep);
  TwoBundleMorphism f{&q.tensor_bundle().bundle, &q.pb13().bundle, q.mu()};
  std::vector<Intertwiner> morphs = mod_of_morphism(f, mod_t, mod13, tol);

  TwoVectorBundle out;
  out.cover = q.cover();
  out.algebra = rep.algebra;
  out.m = std::move(mod_p.m.fibres);
  for (int v = 0; v < q.y3().size(); ++v)
    out.mu.push_back(morphs[v].u * monoid.maps[v].u);
  return out;
}

Report check_two_vector_bundle(const TwoVectorBundle& v, Tolerance tol) {
  Report report;
  report.merge(check_cover(v.cover));
  if (!report.ok()) return report;
  FibreProduct y2(v.cover, 2), y3(v.cover, 3), y4(v.cover, 4);
  if (static_cast<int>(v.m.size()) != y2.size() ||
      static_cast<int>(v.mu.size()) != y3.size()) {
    report.add("bundle", "tables cover Y^[2] and Y^[3]");
    return report;
  }
  for (int y = 0; y < y2.size(); ++y)
    report.merge(check_bimodule(v.m[y], tol),
                 "Y^[2] point " + std::to_string(y) + ": ");
  if (!report.ok()) return report;

  const StarAlgebra& a = *v.algebra;
  std::vector<int> pr23 = y3.projection_table(y2, {1, 2});
  std::vector<int> pr12 = y3.projection_table(y2, {0, 1});
  std::vector<int> pr13 = y3.projection_table(y2, {0, 2});
  for (int y = 0; y < y3.size(); ++y) {
    Fusion fu = fuse(v.m[pr23[y]], v.m[pr12[y]], tol);
    if (v.mu[y].rows() != v.m[pr13[y]].dim ||
        v.mu[y].cols() != fu.module.dim) {
      report.add("Y^[3] point " + std::to_string(y),
                 "mu has the fused source and pr₁₃ target dimensions");
      continue;
    }
    Intertwiner it{fu.module, v.m[pr13[y]], v.mu[y],
                   Automorphism::identity(a), Automorphism::identity(a)};
    report.merge(check_intertwiner(it, true, tol),
                 "Y^[3] point " + std::to_string(y) + ": ");
  }
  if (!report.ok()) return report;

  std::vector<int> q234 = y4.projection_table(y3, {1, 2, 3});
  std::vector<int> q134 = y4.projection_table(y3, {0, 2, 3});
  std::vector<int> q124 = y4.projection_table(y3, {0, 1, 3});
  std::vector<int> q123 = y4.projection_table(y3, {0, 1, 2});
  std::vector<int> q34 = y4.projection_table(y2, {2, 3});
  std::vector<int> q23 = y4.projection_table(y2, {1, 2});
  std::vector<int> q12 = y4.projection_table(y2, {0, 1});
  std::vector<int> q24 = y4.projection_table(y2, {1, 3});
  std::vector<int> q13 = y4.projection_table(y2, {0, 2});
  for (int w = 0; w < y4.size(); ++w) {
    const Bimodule& m34 = v.m[q34[w]];
    const Bimodule& m23 = v.m[q23[w]];
    const Bimodule& m12 = v.m[q12[w]];
    TripleFusion triple = fuse_triple(m34, m23, m12, tol);
    // (μ₂₃₄ ⊠ id) then μ₁₂₄, from the left-bracketed triple.
    Intertwiner u234{triple.hk.module, v.m[q24[w]], v.mu[q234[w]],
                     Automorphism::identity(a), Automorphism::identity(a)};
    Fusion f24_12 = fuse(v.m[q24[w]], m12, tol);
    Intertwiner left = fuse_intertwiners(u234, Intertwiner::identity(m12),
                                         triple.hk_l, f24_12, tol);
    CMatrix path_left = v.mu[q124[w]] * left.u;
    // (id ⊠ μ₁₂₃) then μ₁₃₄, from the right-bracketed triple.
    Intertwiner u123{triple.kl.module, v.m[q13[w]], v.mu[q123[w]],
                     Automorphism::identity(a), Automorphism::identity(a)};
    Fusion f34_13 = fuse(m34, v.m[q13[w]], tol);
    Intertwiner right = fuse_intertwiners(Intertwiner::identity(m34), u123,
                                          triple.h_kl, f34_13, tol);
    CMatrix path_right = v.mu[q134[w]] * right.u * triple.assoc.u;
    double r = max_abs_diff(path_left, path_right);
    if (r > tol.eps)
      report.add("Y^[4] point " + std::to_string(w),
                 "μ(μ ⊠ id) = μ(id ⊠ μ) ∘ assoc", r);
  }
  return report;
}

Report check_refinement(const Refinement& r, Tolerance tol) {
  Report report;
  const TwoVectorBundle& v = *r.source;
  const TwoVectorBundle& w = *r.target;
  if (v.cover.base.points != w.cover.base.points) {
    report.add("refinement", "source and target share the base");
    return report;
  }
  if (static_cast<int>(r.rho.size()) != v.cover.total.points ||
      static_cast<int>(r.phi.size()) != v.cover.total.points) {
    report.add("refinement", "ρ and φ are total on Y");
    return report;
  }
  for (int y = 0; y < v.cover.total.points; ++y) {
    if (r.rho[y] < 0 || r.rho[y] >= w.cover.total.points ||
        w.cover.proj[r.rho[y]] != v.cover.proj[y]) {
      report.add("point " + std::to_string(y), "π′ ∘ ρ = π");
      return report;
    }
    if (!(r.phi[y].parent() == *v.algebra))
      report.add("point " + std::to_string(y), "φ acts on the fibre algebra");
  }
  FibreProduct y2(v.cover, 2), y3(v.cover, 3);
  FibreProduct w2(w.cover, 2), w3(w.cover, 3);
  if (static_cast<int>(r.u.size()) != y2.size()) {
    report.add("refinement", "u is total on Y^[2]");
    return report;
  }
  // ρ^[2] and ρ^[3].
  std::vector<int> rho2(y2.size()), rho3(y3.size());
  for (int y = 0; y < y2.size(); ++y)
    rho2[y] = w2.index_of({r.rho[y2.point(y)[0]], r.rho[y2.point(y)[1]]});
  for (int y = 0; y < y3.size(); ++y)
    rho3[y] = w3.index_of({r.rho[y3.point(y)[0]], r.rho[y3.point(y)[1]],
                           r.rho[y3.point(y)[2]]});

  for (int y = 0; y < y2.size(); ++y) {
    Intertwiner it{v.m[y], w.m[rho2[y]], r.u[y], r.phi[y2.point(y)[1]],
                   r.phi[y2.point(y)[0]]};
    report.merge(check_intertwiner(it, true, tol),
                 "Y^[2] point " + std::to_string(y) + ": ");
  }
  if (!report.ok()) return report;

  std::vector<int> pr23 = y3.projection_table(y2, {1, 2});
  std::vector<int> pr12 = y3.projection_table(y2, {0, 1});
  std::vector<int> pr13 = y3.projection_table(y2, {0, 2});
  for (int y = 0; y < y3.size(); ++y) {
    int p1 = y3.point(y)[0], p2 = y3.point(y)[1], p3 = y3.point(y)[2];
    Intertwiner u23{v.m[pr23[y]], w.m[rho2[pr23[y]]], r.u[pr23[y]], r.phi[p3],
                    r.phi[p2]};
    Intertwiner u12{v.m[pr12[y]], w.m[rho2[pr12[y]]], r.u[pr12[y]], r.phi[p2],
                    r.phi[p1]};
    Fusion src = fuse(v.m[pr23[y]], v.m[pr12[y]], tol);
    Fusion dst = fuse(w.m[rho2[pr23[y]]], w.m[rho2[pr12[y]]], tol);
    Intertwiner fused = fuse_intertwiners(u23, u12, src, dst, tol);
    double res = max_abs_diff(r.u[pr13[y]] * v.mu[y],
                              w.mu[rho3[y]] * fused.u);
    if (res > tol.eps)
      report.add("Y^[3] point " + std::to_string(y),
                 "u ∘ μ = (ρ^[3])*μ′ ∘ (u ⊠ u)", res);
  }
  return report;
}

Refinement identity_refinement(const TwoVectorBundle& v) {
  Refinement r;
  r.source = &v;
  r.target = &v;
  r.rho.resize(v.cover.total.points);
  for (int y = 0; y < v.cover.total.points; ++y) {
    r.rho[y] = y;
    r.phi.push_back(Automorphism::identity(*v.algebra));
  }
  for (const Bimodule& m : v.m)
    r.u.push_back(CMatrix::Identity(m.dim, m.dim));
  return r;
}

}  // namespace gerbel
