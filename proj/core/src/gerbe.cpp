#include "gerbel/gerbe.hpp"

#include <string>
#include <utility>

namespace gerbel {

BundleGerbe::BundleGerbe(Cover cover, PrincipalTwoBundle p, std::vector<int> mu)
    : cover_(std::move(cover)),
      y2_(FibreProduct(cover_, 2)),
      y3_(FibreProduct(cover_, 3)),
      y4_(FibreProduct(cover_, 4)),
      p_(std::move(p)),
      mu_(std::move(mu)) {
  if (p_.underlying.base.points != y2_.size()) {
    throw DimensionError("BundleGerbe: P must live over Y^[2] (base size " +
                         std::to_string(p_.underlying.base.points) + " vs " +
                         std::to_string(y2_.size()) + ")");
  }
  pb23_ = std::make_unique<PulledBackTwoBundle>(
      pullback(p_, FiniteSpace{y3_.size()}, y3_.projection_table(y2_, {1, 2})));
  pb12_ = std::make_unique<PulledBackTwoBundle>(
      pullback(p_, FiniteSpace{y3_.size()}, y3_.projection_table(y2_, {0, 1})));
  pb13_ = std::make_unique<PulledBackTwoBundle>(
      pullback(p_, FiniteSpace{y3_.size()}, y3_.projection_table(y2_, {0, 2})));
  tensor_ = std::make_unique<TensorBundle>(
      tensor(pb23_->bundle, pb12_->bundle));
  if (static_cast<int>(mu_.size()) != tensor_->bundle.underlying.total) {
    throw DimensionError(
        "BundleGerbe: mu table has " + std::to_string(mu_.size()) +
        " entries, expected " +
        std::to_string(tensor_->bundle.underlying.total));
  }
  for (int v : mu_) {
    if (v < 0 || v >= pb13_->bundle.underlying.total) {
      throw Error("BundleGerbe: mu value out of range");
    }
  }
}

int BundleGerbe::apply_mu(int y3_index, int a, int b) const {
  int ia = pb23_->index.at(y3_index).at(a);
  int ib = pb12_->index.at(y3_index).at(b);
  int cls = tensor_->class_of.at(ia).at(ib);
  return pb13_->pairs.at(mu_.at(cls)).second;
}

Report check_gerbe(const BundleGerbe& q) {
  Report report;
  report.merge(check_cover(q.cover()));
  report.merge(check_principal_two_bundle(q.p()));

  // mu as a morphism of principal 2-bundles over Y^[3].
  TwoBundleMorphism mu_morph;
  mu_morph.source = &q.tensor_bundle().bundle;
  mu_morph.target = &q.pb13().bundle;
  mu_morph.map = q.mu();
  report.merge(check_two_bundle_morphism(mu_morph), "mu: ");

  // Associativity over Y^[4]: for (y1,y2,y3,y4) and points p34, p23, p12,
  // mu_124(mu_234(p34 ⊗ p23) ⊗ p12) = mu_134(p34 ⊗ mu_123(p23 ⊗ p12)).
  const FibreProduct& y4 = q.y4();
  const FibreProduct& y3 = q.y3();
  const FibreProduct& y2 = q.y2();
  std::vector<int> pr234 = y4.projection_table(y3, {1, 2, 3});
  std::vector<int> pr134 = y4.projection_table(y3, {0, 2, 3});
  std::vector<int> pr124 = y4.projection_table(y3, {0, 1, 3});
  std::vector<int> pr123 = y4.projection_table(y3, {0, 1, 2});
  std::vector<int> pr34 = y4.projection_table(y2, {2, 3});
  std::vector<int> pr23 = y4.projection_table(y2, {1, 2});
  std::vector<int> pr12 = y4.projection_table(y2, {0, 1});
  for (int w = 0; w < y4.size(); ++w) {
    for (int p34 : q.p().underlying.fibre(pr34[w])) {
      for (int p23 : q.p().underlying.fibre(pr23[w])) {
        for (int p12 : q.p().underlying.fibre(pr12[w])) {
          int p24 = q.apply_mu(pr234[w], p34, p23);
          int lhs = q.apply_mu(pr124[w], p24, p12);
          int p13 = q.apply_mu(pr123[w], p23, p12);
          int rhs = q.apply_mu(pr134[w], p34, p13);
          if (lhs != rhs) {
            report.add("Y^[4] point " + std::to_string(w) + ", points (" +
                           std::to_string(p34) + "," + std::to_string(p23) +
                           "," + std::to_string(p12) + ")",
                       "mu(mu(p34 ⊗ p23) ⊗ p12) = mu(p34 ⊗ mu(p23 ⊗ p12))",
                       1.0);
          }
        }
      }
    }
  }
  return report;
}

BundleGerbe gerbe_from_cocycle(const Cover& cover, const TwoGroup& g,
                               const CrossedModuleOfTwoGroup& crossed,
                               const std::vector<int>& g_table,
                               const std::vector<int>& h_table) {
  FibreProduct y2(cover, 2);
  FibreProduct y3(cover, 3);
  const CrossedModule& cm = crossed.cm;
  const FiniteGroup& hg = cm.H;
  if (static_cast<int>(g_table.size()) != y2.size()) {
    throw DimensionError("gerbe_from_cocycle: g table must cover Y^[2]");
  }
  if (static_cast<int>(h_table.size()) != y3.size()) {
    throw DimensionError("gerbe_from_cocycle: h table must cover Y^[3]");
  }

  // P = Y^[2] × 𝒢_s with anchor φ(y, k) = t(k)⁻¹ · g(y).
  PrincipalBundle underlying =
      PrincipalBundle::trivial(hg, FiniteSpace{y2.size()});
  std::vector<int> anchor(y2.size() * hg.order());
  for (int y = 0; y < y2.size(); ++y) {
    for (int k = 0; k < hg.order(); ++k) {
      anchor[y * hg.order() + k] = g.G0.mul(g.G0.inv(cm.t[k]), g_table[y]);
    }
  }
  PrincipalTwoBundle p{&g, &crossed, std::move(underlying), std::move(anchor)};

  // mu((y, k2) ⊗ (y, k1)) = (pr13(y), h(y)⁻¹ · α(g23(y), k1) · k2).
  std::vector<int> pr23 = y3.projection_table(y2, {1, 2});
  std::vector<int> pr12 = y3.projection_table(y2, {0, 1});
  std::vector<int> pr13 = y3.projection_table(y2, {0, 2});
  PulledBackTwoBundle pb23 = pullback(p, FiniteSpace{y3.size()}, pr23);
  PulledBackTwoBundle pb12 = pullback(p, FiniteSpace{y3.size()}, pr12);
  PulledBackTwoBundle pb13 = pullback(p, FiniteSpace{y3.size()}, pr13);
  TensorBundle t = tensor(pb23.bundle, pb12.bundle);

  std::vector<int> mu(t.bundle.underlying.total);
  for (int c = 0; c < t.bundle.underlying.total; ++c) {
    auto [e23, e12] = t.representative[c];
    auto [y, pt23] = pb23.pairs[e23];
    int k2 = pt23 % hg.order();
    int pt12 = pb12.pairs[e12].second;
    int k1 = pt12 % hg.order();
    int val =
        hg.mul(hg.mul(hg.inv(h_table[y]), cm.act(g_table[pr23[y]], k1)), k2);
    int target_total = pr13[y] * hg.order() + val;
    mu[c] = pb13.index[y].at(target_total);
  }
  return BundleGerbe(cover, std::move(p), std::move(mu));
}

BundleGerbe trivial_gerbe(const Cover& cover, const TwoGroup& g,
                          const CrossedModuleOfTwoGroup& crossed) {
  FibreProduct y2(cover, 2);
  FibreProduct y3(cover, 3);
  return gerbe_from_cocycle(cover, g, crossed,
                            std::vector<int>(y2.size(), g.G0.id()),
                            std::vector<int>(y3.size(), crossed.cm.H.id()));
}

BundleGerbe extend_gerbe(const BundleGerbe& q, const TwoGroupHom& f,
                         const CrossedModuleOfTwoGroup& target_crossed) {
  ExtendedTwoBundle ext = extend_two_group(q.p(), f, target_crossed);
  const FiniteGroup& h_new = target_crossed.cm.H;

  // Rebuild the pullbacks and tensor for the extended bundle.
  const FibreProduct& y3 = q.y3();
  const FibreProduct& y2 = q.y2();
  std::vector<int> pr23 = y3.projection_table(y2, {1, 2});
  std::vector<int> pr12 = y3.projection_table(y2, {0, 1});
  PulledBackTwoBundle npb23 =
      pullback(ext.bundle, FiniteSpace{y3.size()}, pr23);
  PulledBackTwoBundle npb12 =
      pullback(ext.bundle, FiniteSpace{y3.size()}, pr12);
  PulledBackTwoBundle npb13 = pullback(ext.bundle, FiniteSpace{y3.size()},
                                       y3.projection_table(y2, {0, 2}));
  TensorBundle nt = tensor(npb23.bundle, npb12.bundle);

  // mu' on a class with representative ([p1, h1], [p2, h2]) goes through the
  // ψ monoidality isomorphism ψ((p1,h1),(p2,h2)) = ((p1,p2), α(F(φ1(p1)),h2)·h1)
  // followed by F_*(mu): [x, h] ↦ [mu(x), h].
  std::vector<int> mu_new(nt.bundle.underlying.total);
  for (int c = 0; c < nt.bundle.underlying.total; ++c) {
    auto [e23, e12] = nt.representative[c];
    auto [y, q23] = npb23.pairs[e23];
    int q12 = npb12.pairs[e12].second;
    auto [p1, h1] = ext.representative[q23];
    auto [p2, h2] = ext.representative[q12];
    int anchor_p1 = q.p().anchor[p1];
    int h_comb =
        h_new.mul(target_crossed.cm.act(f.F0[anchor_p1], h2), h1);
    int m = q.apply_mu(y, p1, p2);
    int ext_cls = ext.class_of[m][h_comb];
    mu_new[c] = npb13.index[y].at(ext_cls);
  }
  return BundleGerbe(q.cover(), ext.bundle, std::move(mu_new));
}

BundleGerbe pullback_gerbe(const BundleGerbe& q, const Cover& finer,
                           const std::vector<int>& r) {
  if (static_cast<int>(r.size()) != finer.total.points) {
    throw DimensionError("pullback_gerbe: refinement map must cover Y");
  }
  for (int y = 0; y < finer.total.points; ++y) {
    if (r[y] < 0 || r[y] >= q.cover().total.points ||
        finer.proj[y] != q.cover().proj[r[y]]) {
      throw Error(
          "pullback_gerbe: refinement map does not commute with the "
          "projections at point " +
          std::to_string(y));
    }
  }
  FibreProduct ny2(finer, 2);
  FibreProduct ny3(finer, 3);
  // Induced maps r^2: Y^[2] → Y'^[2] and r^3: Y^[3] → Y'^[3].
  std::vector<int> r2(ny2.size()), r3(ny3.size());
  for (int i = 0; i < ny2.size(); ++i) {
    r2[i] = q.y2().index_of({r[ny2.point(i)[0]], r[ny2.point(i)[1]]});
  }
  for (int i = 0; i < ny3.size(); ++i) {
    r3[i] = q.y3().index_of(
        {r[ny3.point(i)[0]], r[ny3.point(i)[1]], r[ny3.point(i)[2]]});
  }
  PulledBackTwoBundle np = pullback(q.p(), FiniteSpace{ny2.size()}, r2);

  std::vector<int> npr23 = ny3.projection_table(ny2, {1, 2});
  std::vector<int> npr12 = ny3.projection_table(ny2, {0, 1});
  std::vector<int> npr13 = ny3.projection_table(ny2, {0, 2});
  PulledBackTwoBundle npb23 =
      pullback(np.bundle, FiniteSpace{ny3.size()}, npr23);
  PulledBackTwoBundle npb12 =
      pullback(np.bundle, FiniteSpace{ny3.size()}, npr12);
  PulledBackTwoBundle npb13 =
      pullback(np.bundle, FiniteSpace{ny3.size()}, npr13);
  TensorBundle nt = tensor(npb23.bundle, npb12.bundle);

  std::vector<int> mu_new(nt.bundle.underlying.total);
  for (int c = 0; c < nt.bundle.underlying.total; ++c) {
    auto [e23, e12] = nt.representative[c];
    auto [y, a] = npb23.pairs[e23];
    int b = npb12.pairs[e12].second;
    // Unwrap to points of the original P.
    int pa = np.pairs[a].second;
    int pb = np.pairs[b].second;
    int m = q.apply_mu(r3[y], pa, pb);
    int wrapped = np.index[npr13[y]].at(m);
    mu_new[c] = npb13.index[y].at(wrapped);
  }
  return BundleGerbe(finer, np.bundle, std::move(mu_new));
}

}  // namespace gerbel
