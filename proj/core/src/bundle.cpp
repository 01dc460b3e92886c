#include "gerbel/bundle.hpp"

#include <algorithm>
#include <numeric>

namespace gerbel {

Report check_cover(const Cover& c) {
  Report report;
  if (static_cast<int>(c.proj.size()) != c.total.points) {
    report.add("cover", "projection is total");
    return report;
  }
  std::vector<bool> hit(c.base.points, false);
  for (int y = 0; y < c.total.points; ++y) {
    if (c.proj[y] < 0 || c.proj[y] >= c.base.points) {
      report.add("point " + std::to_string(y), "projection lands in base");
      return report;
    }
    hit[c.proj[y]] = true;
  }
  for (int x = 0; x < c.base.points; ++x)
    if (!hit[x]) report.add("base point " + std::to_string(x), "cover is surjective");
  return report;
}

FibreProduct::FibreProduct(const Cover& cover, int k) : k_(k) {
  if (k < 1) throw Error("FibreProduct: k must be >= 1");
  check_cover(cover).require("FibreProduct");
  std::vector<int> tuple(k, 0);
  // enumerate lexicographically, constrained to equal base image
  for (int x = 0; x < cover.base.points; ++x) {
    std::vector<int> sheet;
    for (int y = 0; y < cover.total.points; ++y)
      if (cover.proj[y] == x) sheet.push_back(y);
    std::vector<int> pick(k, 0);
    while (true) {
      std::vector<int> pt(k);
      for (int i = 0; i < k; ++i) pt[i] = sheet[pick[i]];
      index_[pt] = static_cast<int>(points_.size());
      points_.push_back(std::move(pt));
      base_.push_back(x);
      int i = k - 1;
      while (i >= 0 && pick[i] + 1 == static_cast<int>(sheet.size())) pick[i--] = 0;
      if (i < 0) break;
      ++pick[i];
    }
  }
}

int FibreProduct::index_of(const std::vector<int>& tuple) const {
  auto it = index_.find(tuple);
  if (it == index_.end()) throw Error("FibreProduct: tuple not in fibre product");
  return it->second;
}

int FibreProduct::base_of(int idx) const { return base_[idx]; }

int FibreProduct::project(int idx, const std::vector<int>& coords,
                          const FibreProduct& target) const {
  std::vector<int> pt;
  pt.reserve(coords.size());
  for (int c : coords) pt.push_back(points_[idx][c]);
  return target.index_of(pt);
}

std::vector<int> FibreProduct::projection_table(
    const FibreProduct& target, const std::vector<int>& coords) const {
  std::vector<int> out(size());
  for (int idx = 0; idx < size(); ++idx)
    out[idx] = project(idx, coords, target);
  return out;
}

std::vector<int> PrincipalBundle::fibre(int x) const {
  std::vector<int> out;
  for (int p = 0; p < total; ++p)
    if (proj[p] == x) out.push_back(p);
  return out;
}

PrincipalBundle PrincipalBundle::trivial(const FiniteGroup& g, FiniteSpace base) {
  PrincipalBundle p;
  p.group = &g;
  p.base = base;
  p.total = base.points * g.order();
  p.proj.resize(p.total);
  p.action.assign(p.total, std::vector<int>(g.order()));
  for (int x = 0; x < base.points; ++x)
    for (int a = 0; a < g.order(); ++a) {
      int idx = x * g.order() + a;
      p.proj[idx] = x;
      for (int b = 0; b < g.order(); ++b) p.action[idx][b] = x * g.order() + g.mul(a, b);
    }
  return p;
}

Report check_principal_bundle(const PrincipalBundle& p) {
  Report report;
  const int n = p.group->order();
  if (static_cast<int>(p.proj.size()) != p.total ||
      static_cast<int>(p.action.size()) != p.total) {
    report.add("bundle", "tables are total");
    return report;
  }
  for (int q = 0; q < p.total; ++q) {
    if (static_cast<int>(p.action[q].size()) != n) {
      report.add("point " + std::to_string(q), "action row is total");
      return report;
    }
    if (p.act(q, p.group->id()) != q)
      report.add("point " + std::to_string(q), "p·e = p");
    for (int a = 0; a < n; ++a) {
      if (p.proj[p.act(q, a)] != p.proj[q])
        report.add("point " + std::to_string(q), "action preserves fibres");
      for (int b = 0; b < n; ++b)
        if (p.act(p.act(q, a), b) != p.act(q, p.group->mul(a, b)))
          report.add("point " + std::to_string(q), "(p·a)·b = p·(ab)");
    }
  }
  for (int x = 0; x < p.base.points; ++x) {
    auto f = p.fibre(x);
    if (f.empty()) {
      report.add("base point " + std::to_string(x), "fibre nonempty");
      continue;
    }
    if (static_cast<int>(f.size()) != n) {
      report.add("base point " + std::to_string(x), "fibre is a single free orbit");
      continue;
    }
    // freeness + transitivity from the basepoint
    std::vector<bool> seen(p.total, false);
    for (int a = 0; a < n; ++a) {
      int q = p.act(f[0], a);
      if (seen[q])
        report.add("base point " + std::to_string(x), "action is free on the fibre");
      seen[q] = true;
    }
    for (int q : f)
      if (!seen[q])
        report.add("base point " + std::to_string(x), "action is transitive on the fibre");
  }
  return report;
}

Report check_bundle_morphism(const BundleMorphism& f) {
  Report report;
  const auto& p = *f.source;
  const auto& q = *f.target;
  if (static_cast<int>(f.map.size()) != p.total) {
    report.add("morphism", "map is total");
    return report;
  }
  for (int a = 0; a < p.total; ++a) {
    if (q.proj[f.map[a]] != p.proj[a])
      report.add("point " + std::to_string(a), "fibre preserving");
    for (int g = 0; g < p.group->order(); ++g)
      if (f.map[p.act(a, g)] != q.act(f.map[a], g))
        report.add("point " + std::to_string(a), "f(p·g) = f(p)·g");
  }
  return report;
}

PrincipalTwoBundle PrincipalTwoBundle::trivial(const TwoGroup& g,
                                               const CrossedModuleOfTwoGroup& crossed,
                                               FiniteSpace base) {
  PrincipalTwoBundle p;
  p.twogroup = &g;
  p.crossed = &crossed;
  p.underlying = PrincipalBundle::trivial(crossed.cm.H, base);
  p.anchor.assign(p.underlying.total, 0);
  // anchor(x, h) = t(h)^{-1}, anti-equivariant with constant value e on sections
  for (int x = 0; x < base.points; ++x)
    for (int h = 0; h < crossed.cm.H.order(); ++h)
      p.anchor[x * crossed.cm.H.order() + h] = g.G0.inv(crossed.cm.t[h]);
  return p;
}

Report check_principal_two_bundle(const PrincipalTwoBundle& p) {
  Report report = check_principal_bundle(p.underlying);
  if (!report.ok()) return report;
  const auto& cm = p.crossed->cm;
  const auto& g0 = p.twogroup->G0;
  if (static_cast<int>(p.anchor.size()) != p.underlying.total) {
    report.add("anchor", "anchor is total");
    return report;
  }
  for (int q = 0; q < p.underlying.total; ++q)
    for (int h = 0; h < cm.H.order(); ++h)
      if (p.anchor[p.underlying.act(q, h)] !=
          g0.mul(g0.inv(cm.t[h]), p.anchor[q]))
        report.add("point " + std::to_string(q) + ", h=" + std::to_string(h),
                   "φ(ph) = t(h)⁻¹φ(p)");
  return report;
}

Report check_two_bundle_morphism(const TwoBundleMorphism& f) {
  BundleMorphism underlying{&f.source->underlying, &f.target->underlying, f.map};
  Report report = check_bundle_morphism(underlying);
  if (!report.ok()) return report;
  for (int a = 0; a < f.source->underlying.total; ++a)
    if (f.target->anchor[f.map[a]] != f.source->anchor[a])
      report.add("point " + std::to_string(a), "anchor preserved");
  return report;
}

TensorBundle tensor(const PrincipalTwoBundle& p1, const PrincipalTwoBundle& p2) {
  if (p1.twogroup != p2.twogroup &&
      !(p1.twogroup->G0 == p2.twogroup->G0 && p1.twogroup->G1 == p2.twogroup->G1))
    throw Error("tensor: bundles have different structure 2-groups");
  if (p1.underlying.base.points != p2.underlying.base.points)
    throw Error("tensor: bundles have different bases");
  const auto& cm = p1.crossed->cm;
  const auto& g0 = p1.twogroup->G0;
  const int nh = cm.H.order();

  // Enumerate fibrewise pairs and their orbits under the balancing action.
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> pair_index(p1.underlying.total,
                                           std::vector<int>(p2.underlying.total, -1));
  for (int a = 0; a < p1.underlying.total; ++a)
    for (int b = 0; b < p2.underlying.total; ++b)
      if (p1.underlying.proj[a] == p2.underlying.proj[b]) {
        pair_index[a][b] = static_cast<int>(pairs.size());
        pairs.emplace_back(a, b);
      }

  auto balanced = [&](int a, int b, int h) -> std::pair<int, int> {
    int a2 = p1.underlying.act(a, cm.H.inv(h));
    int g_inv = g0.inv(p1.anchor[a]);
    int b2 = p2.underlying.act(b, cm.act(g_inv, h));
    return {a2, b2};
  };

  std::vector<int> orbit(pairs.size(), -1);
  std::vector<std::pair<int, int>> reps;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (orbit[i] >= 0) continue;
    int cls = static_cast<int>(reps.size());
    reps.push_back(pairs[i]);  // lowest lexicographic pair encountered first
    for (int h = 0; h < nh; ++h) {
      auto [a2, b2] = balanced(pairs[i].first, pairs[i].second, h);
      int j = pair_index[a2][b2];
      if (j < 0) throw Error("tensor: balancing action left the fibre product");
      if (orbit[j] >= 0 && orbit[j] != cls)
        throw Error("tensor: inconsistent orbit structure");
      orbit[j] = cls;
    }
  }

  TensorBundle out;
  out.representative = reps;
  out.class_of.assign(p1.underlying.total,
                      std::vector<int>(p2.underlying.total, -1));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out.class_of[pairs[i].first][pairs[i].second] = orbit[i];

  PrincipalTwoBundle& t = out.bundle;
  t.twogroup = p1.twogroup;
  t.crossed = p1.crossed;
  t.underlying.group = &cm.H;
  t.underlying.base = p1.underlying.base;
  t.underlying.total = static_cast<int>(reps.size());
  t.underlying.proj.resize(t.underlying.total);
  t.underlying.action.assign(t.underlying.total, std::vector<int>(nh));
  t.anchor.resize(t.underlying.total);
  for (int c = 0; c < t.underlying.total; ++c) {
    auto [a, b] = reps[c];
    t.underlying.proj[c] = p1.underlying.proj[a];
    t.anchor[c] = g0.mul(p1.anchor[a], p2.anchor[b]);
    for (int h = 0; h < nh; ++h)
      t.underlying.action[c][h] = out.class_of[p1.underlying.act(a, h)][b];
  }
  check_principal_two_bundle(t).require("tensor result");
  return out;
}

ExtendedBundle extend_group(const PrincipalBundle& p, const GroupHom& f) {
  const FiniteGroup& g = *p.group;
  const FiniteGroup& h = f.codomain();
  if (!(f.domain() == g)) throw Error("extend_group: homomorphism domain mismatch");

  ExtendedBundle out;
  out.class_of.assign(p.total, std::vector<int>(h.order(), -1));
  for (int a = 0; a < p.total; ++a)
    for (int x = 0; x < h.order(); ++x) {
      if (out.class_of[a][x] >= 0) continue;
      int cls = static_cast<int>(out.representative.size());
      out.representative.emplace_back(a, x);
      for (int gg = 0; gg < g.order(); ++gg) {
        int a2 = p.act(a, gg);
        int x2 = h.mul(h.inv(f(gg)), x);
        out.class_of[a2][x2] = cls;
      }
    }

  PrincipalBundle& e = out.bundle;
  e.group = &h;
  e.base = p.base;
  e.total = static_cast<int>(out.representative.size());
  e.proj.resize(e.total);
  e.action.assign(e.total, std::vector<int>(h.order()));
  for (int c = 0; c < e.total; ++c) {
    auto [a, x] = out.representative[c];
    e.proj[c] = p.proj[a];
    for (int y = 0; y < h.order(); ++y)
      e.action[c][y] = out.class_of[a][h.mul(x, y)];
  }
  check_principal_bundle(e).require("extend_group result");
  return out;
}

ExtendedTwoBundle extend_two_group(const PrincipalTwoBundle& p, const TwoGroupHom& f,
                                   const CrossedModuleOfTwoGroup& target_crossed) {
  const TwoGroup& target = *f.target;
  const auto& source_crossed = *p.crossed;
  // restrict F1 to ker(s) -> ker(s)
  std::vector<int> restricted(source_crossed.cm.H.order());
  for (int k = 0; k < source_crossed.cm.H.order(); ++k) {
    int image = f.F1[source_crossed.embed[k]];
    int proj = target_crossed.project[image];
    if (proj < 0) throw Error("extend_two_group: F1 does not restrict to kernels");
    restricted[k] = proj;
  }
  GroupHom fs(source_crossed.cm.H, target_crossed.cm.H, std::move(restricted));

  ExtendedBundle eb = extend_group(p.underlying, fs);
  ExtendedTwoBundle out;
  out.class_of = std::move(eb.class_of);
  out.representative = std::move(eb.representative);
  out.bundle.twogroup = &target;
  out.bundle.crossed = &target_crossed;
  out.bundle.underlying = std::move(eb.bundle);
  out.bundle.anchor.resize(out.bundle.underlying.total);
  const auto& g0 = target.G0;
  for (int c = 0; c < out.bundle.underlying.total; ++c) {
    auto [a, h] = out.representative[c];
    out.bundle.anchor[c] =
        g0.mul(g0.inv(target_crossed.cm.t[h]), f.F0[p.anchor[a]]);
  }
  check_principal_two_bundle(out.bundle).require("extend_two_group result");
  return out;
}

std::vector<int> psi_monoidality(const ExtendedTwoBundle& e1,
                                 const ExtendedTwoBundle& e2,
                                 const TensorBundle& ext_tensor,
                                 const PrincipalTwoBundle& p1,
                                 const TensorBundle& orig_tensor,
                                 const ExtendedTwoBundle& ext_of_tensor,
                                 const TwoGroupHom& f,
                                 const CrossedModuleOfTwoGroup& target_crossed) {
  const FiniteGroup& hn = target_crossed.cm.H;
  std::vector<int> out(ext_tensor.bundle.underlying.total);
  for (int c = 0; c < ext_tensor.bundle.underlying.total; ++c) {
    auto [q1, q2] = ext_tensor.representative[c];
    auto [a1, h1] = e1.representative[q1];
    auto [a2, h2] = e2.representative[q2];
    int h = hn.mul(target_crossed.cm.act(f.F0[p1.anchor[a1]], h2), h1);
    out[c] = ext_of_tensor.class_of[orig_tensor.class_of[a1][a2]][h];
  }
  return out;
}

PulledBackTwoBundle pullback(const PrincipalTwoBundle& p, FiniteSpace new_base,
                             const std::vector<int>& base_map) {
  PulledBackTwoBundle out;
  out.index.assign(new_base.points, std::vector<int>(p.underlying.total, -1));
  for (int x = 0; x < new_base.points; ++x)
    for (int q = 0; q < p.underlying.total; ++q)
      if (p.underlying.proj[q] == base_map[x]) {
        out.index[x][q] = static_cast<int>(out.pairs.size());
        out.pairs.emplace_back(x, q);
      }
  PrincipalTwoBundle& b = out.bundle;
  b.twogroup = p.twogroup;
  b.crossed = p.crossed;
  b.underlying.group = p.underlying.group;
  b.underlying.base = new_base;
  b.underlying.total = static_cast<int>(out.pairs.size());
  b.underlying.proj.resize(b.underlying.total);
  b.underlying.action.assign(b.underlying.total,
                             std::vector<int>(p.underlying.group->order()));
  b.anchor.resize(b.underlying.total);
  for (int c = 0; c < b.underlying.total; ++c) {
    auto [x, q] = out.pairs[c];
    b.underlying.proj[c] = x;
    b.anchor[c] = p.anchor[q];
    for (int h = 0; h < p.underlying.group->order(); ++h)
      b.underlying.action[c][h] = out.index[x][p.underlying.act(q, h)];
  }
  check_principal_two_bundle(b).require("pullback result");
  return out;
}

}  // namespace gerbel
