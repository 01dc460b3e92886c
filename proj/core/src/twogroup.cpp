#include "gerbel/twogroup.hpp"

namespace gerbel {

namespace {

Report check_hom_table(const FiniteGroup& dom, const FiniteGroup& cod,
                       const std::vector<int>& table, const std::string& name) {
  Report report;
  if (static_cast<int>(table.size()) != dom.order()) {
    report.add(name, "table is total");
    return report;
  }
  for (int x : table)
    if (x < 0 || x >= cod.order()) {
      report.add(name, "values in codomain");
      return report;
    }
  for (int a = 0; a < dom.order(); ++a)
    for (int b = 0; b < dom.order(); ++b)
      if (table[dom.mul(a, b)] != cod.mul(table[a], table[b]))
        report.add(name + "(" + std::to_string(a) + "," + std::to_string(b) + ")",
                   "f(ab) = f(a)f(b)");
  return report;
}

}  // namespace

Report check_two_group(const TwoGroup& g) {
  Report report;
  report.merge(check_hom_table(g.G1, g.G0, g.s, "s"));
  report.merge(check_hom_table(g.G1, g.G0, g.t, "t"));
  report.merge(check_hom_table(g.G0, g.G1, g.i, "i"));
  if (!report.ok()) return report;
  for (int a = 0; a < g.G0.order(); ++a) {
    if (g.s[g.i[a]] != a) report.add("object " + std::to_string(a), "s(i(a)) = a");
    if (g.t[g.i[a]] != a) report.add("object " + std::to_string(a), "t(i(a)) = a");
  }
  for (int x : kernel_s(g))
    for (int y : kernel_t(g))
      if (g.G1.mul(x, y) != g.G1.mul(y, x))
        report.add("morphisms (" + std::to_string(x) + "," + std::to_string(y) + ")",
                   "ker(s) and ker(t) commute");
  return report;
}

Report check_crossed_module(const CrossedModule& cm) {
  Report report;
  report.merge(check_hom_table(cm.H, cm.G, cm.t, "t"));
  if (static_cast<int>(cm.alpha.size()) != cm.G.order()) {
    report.add("alpha", "table is total over G");
    return report;
  }
  for (int g = 0; g < cm.G.order(); ++g)
    if (static_cast<int>(cm.alpha[g].size()) != cm.H.order()) {
      report.add("alpha[" + std::to_string(g) + "]", "table is total over H");
      return report;
    }
  // alpha is an action by automorphisms
  for (int g = 0; g < cm.G.order(); ++g)
    for (int h1 = 0; h1 < cm.H.order(); ++h1)
      for (int h2 = 0; h2 < cm.H.order(); ++h2)
        if (cm.act(g, cm.H.mul(h1, h2)) != cm.H.mul(cm.act(g, h1), cm.act(g, h2)))
          report.add("alpha(" + std::to_string(g) + ";" + std::to_string(h1) + "," +
                         std::to_string(h2) + ")",
                     "alpha(g, h1 h2) = alpha(g,h1) alpha(g,h2)");
  for (int g1 = 0; g1 < cm.G.order(); ++g1)
    for (int g2 = 0; g2 < cm.G.order(); ++g2)
      for (int h = 0; h < cm.H.order(); ++h)
        if (cm.act(cm.G.mul(g1, g2), h) != cm.act(g1, cm.act(g2, h)))
          report.add("alpha(" + std::to_string(g1) + "," + std::to_string(g2) + ";" +
                         std::to_string(h) + ")",
                     "alpha(g1 g2, h) = alpha(g1, alpha(g2, h))");
  for (int h = 0; h < cm.H.order(); ++h)
    if (cm.act(cm.G.id(), h) != h)
      report.add("alpha(e;" + std::to_string(h) + ")", "alpha(e, h) = h");
  if (!report.ok()) return report;
  // equivariance: t(alpha(g,h)) = g t(h) g^-1
  for (int g = 0; g < cm.G.order(); ++g)
    for (int h = 0; h < cm.H.order(); ++h)
      if (cm.t[cm.act(g, h)] != cm.G.mul(cm.G.mul(g, cm.t[h]), cm.G.inv(g)))
        report.add("(" + std::to_string(g) + "," + std::to_string(h) + ")",
                   "t(alpha(g,h)) = g t(h) g^-1");
  // Peiffer: alpha(t(h), x) = h x h^-1
  for (int h = 0; h < cm.H.order(); ++h)
    for (int x = 0; x < cm.H.order(); ++x)
      if (cm.act(cm.t[h], x) != cm.H.mul(cm.H.mul(h, x), cm.H.inv(h)))
        report.add("(" + std::to_string(h) + "," + std::to_string(x) + ")",
                   "alpha(t(h), x) = h x h^-1");
  return report;
}

int compose(const TwoGroup& g, int x, int y) {
  if (g.s[x] != g.t[y])
    throw Error("compose: not composable, s(X) = " + std::to_string(g.s[x]) +
                " but t(Y) = " + std::to_string(g.t[y]));
  return g.G1.mul(g.G1.mul(x, g.G1.inv(g.i[g.s[x]])), y);
}

int invert2(const TwoGroup& g, int x) {
  return g.G1.mul(g.G1.mul(g.i[g.s[x]], g.G1.inv(x)), g.i[g.t[x]]);
}

TwoGroup two_group_from_crossed_module(const CrossedModule& cm) {
  check_crossed_module(cm).require("two_group_from_crossed_module");
  const int nh = cm.H.order(), ng = cm.G.order();
  const int n1 = nh * ng;
  std::vector<std::vector<int>> mul1(n1, std::vector<int>(n1));
  for (int h = 0; h < nh; ++h)
    for (int g = 0; g < ng; ++g)
      for (int h2 = 0; h2 < nh; ++h2)
        for (int g2 = 0; g2 < ng; ++g2)
          mul1[h * ng + g][h2 * ng + g2] =
              cm.H.mul(h, cm.act(g, h2)) * ng + cm.G.mul(g, g2);
  FiniteGroup g1(std::move(mul1), cm.H.id() * ng + cm.G.id(),
                 cm.H.name() + "⋊" + cm.G.name());
  TwoGroup out{cm.G, std::move(g1), {}, {}, {}};
  out.s.resize(n1);
  out.t.resize(n1);
  out.i.resize(ng);
  for (int h = 0; h < nh; ++h)
    for (int g = 0; g < ng; ++g) {
      out.s[h * ng + g] = g;
      out.t[h * ng + g] = cm.G.mul(cm.t[h], g);
    }
  for (int g = 0; g < ng; ++g) out.i[g] = cm.H.id() * ng + g;
  check_two_group(out).require("two_group_from_crossed_module result");
  return out;
}

std::vector<int> kernel_s(const TwoGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.G1.order(); ++x)
    if (g.s[x] == g.G0.id()) out.push_back(x);
  return out;
}

std::vector<int> kernel_t(const TwoGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.G1.order(); ++x)
    if (g.t[x] == g.G0.id()) out.push_back(x);
  return out;
}

CrossedModuleOfTwoGroup crossed_module_from_two_group(const TwoGroup& g) {
  check_two_group(g).require("crossed_module_from_two_group");
  std::vector<int> embed = kernel_s(g);
  FiniteGroup h = subgroup(g.G1, embed, "ker(s)");
  std::vector<int> project(g.G1.order(), -1);
  for (std::size_t k = 0; k < embed.size(); ++k) project[embed[k]] = static_cast<int>(k);

  CrossedModule cm{g.G0, h, {}, {}};
  cm.t.resize(h.order());
  for (int k = 0; k < h.order(); ++k) cm.t[k] = g.t[embed[k]];
  cm.alpha.assign(g.G0.order(), std::vector<int>(h.order()));
  for (int a = 0; a < g.G0.order(); ++a)
    for (int k = 0; k < h.order(); ++k) {
      int conj = g.G1.mul(g.G1.mul(g.i[a], embed[k]), g.G1.inv(g.i[a]));
      if (project[conj] < 0)
        throw Error("crossed_module_from_two_group: conjugation leaves ker(s)");
      cm.alpha[a][k] = project[conj];
    }
  check_crossed_module(cm).require("crossed_module_from_two_group result");
  return {std::move(cm), std::move(embed), std::move(project)};
}

Report check_two_group_hom(const TwoGroupHom& f) {
  Report report;
  const TwoGroup& g = *f.source;
  const TwoGroup& h = *f.target;
  report.merge(check_hom_table(g.G0, h.G0, f.F0, "F0"));
  report.merge(check_hom_table(g.G1, h.G1, f.F1, "F1"));
  if (!report.ok()) return report;
  for (int x = 0; x < g.G1.order(); ++x) {
    if (f.F0[g.s[x]] != h.s[f.F1[x]])
      report.add("morphism " + std::to_string(x), "F0(s(X)) = s(F1(X))");
    if (f.F0[g.t[x]] != h.t[f.F1[x]])
      report.add("morphism " + std::to_string(x), "F0(t(X)) = t(F1(X))");
  }
  for (int a = 0; a < g.G0.order(); ++a)
    if (f.F1[g.i[a]] != h.i[f.F0[a]])
      report.add("object " + std::to_string(a), "F1(i(a)) = i(F0(a))");
  if (!report.ok()) return report;
  // Composition preservation follows from the conditions above; spot-verify.
  for (int x = 0; x < g.G1.order(); ++x)
    for (int y = 0; y < g.G1.order(); ++y) {
      if (g.s[x] != g.t[y]) continue;
      if (f.F1[compose(g, x, y)] != compose(h, f.F1[x], f.F1[y]))
        report.add("composable (" + std::to_string(x) + "," + std::to_string(y) + ")",
                   "F1(X ∘ Y) = F1(X) ∘ F1(Y)");
    }
  return report;
}

}  // namespace gerbel
