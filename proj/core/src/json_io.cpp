#include "gerbel/json_io.hpp"

namespace gerbel::json_io {

namespace {

std::vector<int> ints(const json& j) { return j.get<std::vector<int>>(); }

std::vector<std::vector<int>> tables(const json& j) {
  return j.get<std::vector<std::vector<int>>>();
}

}  // namespace

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error("json: complex numbers are [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error("json: matrix body expected");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols)
      throw Error("json: ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

json to_json(const Report& r) {
  json v = json::array();
  for (const Violation& x : r.violations())
    v.push_back({{"location", x.location},
                 {"equation", x.equation},
                 {"residual", x.residual}});
  return json{{"status", r.ok() ? "ok" : "violations"},
              {"violations", std::move(v)}};
}

Report report_from_json(const json& j) {
  Report r;
  for (const json& v : j.at("violations"))
    r.add(v.at("location").get<std::string>(),
          v.at("equation").get<std::string>(), v.at("residual").get<double>());
  return r;
}

json to_json(const FiniteGroup& g) {
  std::vector<std::vector<int>> mul(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) mul[a][b] = g.mul(a, b);
  return json{{"mul", mul}, {"id", g.id()}, {"name", g.name()}};
}

FiniteGroup group_from_json(const json& j) {
  return FiniteGroup(tables(j.at("mul")), j.at("id").get<int>(),
                     j.value("name", std::string("G")));
}

json to_json(const CrossedModule& cm) {
  std::vector<std::vector<int>> alpha(cm.G.order(),
                                      std::vector<int>(cm.H.order()));
  for (int g = 0; g < cm.G.order(); ++g)
    for (int h = 0; h < cm.H.order(); ++h) alpha[g][h] = cm.act(g, h);
  return json{{"g", to_json(cm.G)},
              {"h", to_json(cm.H)},
              {"t", cm.t},
              {"alpha", alpha}};
}

CrossedModule crossed_module_from_json(const json& j) {
  return CrossedModule{group_from_json(j.at("g")), group_from_json(j.at("h")),
                       ints(j.at("t")), tables(j.at("alpha"))};
}

json to_json(const TwoGroup& g) {
  return json{{"g0", to_json(g.G0)},
              {"g1", to_json(g.G1)},
              {"s", g.s},
              {"t", g.t},
              {"i", g.i}};
}

TwoGroup two_group_from_json(const json& j) {
  return TwoGroup{group_from_json(j.at("g0")), group_from_json(j.at("g1")),
                  ints(j.at("s")), ints(j.at("t")), ints(j.at("i"))};
}

json to_json(const StarAlgebra& a) {
  return json{{"blocks", a.block_dims()}, {"weights", a.weights()}};
}

StarAlgebra algebra_from_json(const json& j) {
  std::vector<double> w;
  if (j.contains("weights")) w = j.at("weights").get<std::vector<double>>();
  return StarAlgebra(ints(j.at("blocks")), std::move(w));
}

json to_json(const AlgebraElement& e) {
  json blocks = json::array();
  for (const CMatrix& b : e.blocks) blocks.push_back(to_json(b));
  return blocks;
}

AlgebraElement element_from_json(const StarAlgebra& a, const json& j) {
  AlgebraElement e = a.zero();
  if (!j.is_array() || j.size() != e.blocks.size())
    throw Error("json: element block count mismatch");
  for (std::size_t k = 0; k < e.blocks.size(); ++k) {
    CMatrix b = matrix_from_json(j[k]);
    if (b.rows() != e.blocks[k].rows() || b.cols() != e.blocks[k].cols())
      throw Error("json: element block shape mismatch");
    e.blocks[k] = std::move(b);
  }
  return e;
}

json to_json(const Automorphism& t) {
  return json{{"kind", "linear"}, {"matrix", to_json(t.action())}};
}

Automorphism automorphism_from_json(const StarAlgebra& a, const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "inner")
    return Automorphism::inner(a, element_from_json(a, j.at("u")));
  if (kind == "linear")
    return Automorphism(a, matrix_from_json(j.at("matrix")));
  throw Error("json: automorphism kind must be \"inner\" or \"linear\"");
}

json representation_to_json(const Representation& r) {
  json r0 = json::array();
  for (const Automorphism& t : r.R0) r0.push_back(to_json(t));
  json r1 = json::array();
  for (const NElement& n : r.R1) {
    int i1 = -1, i2 = -1;
    for (std::size_t k = 0; k < r.R0.size(); ++k) {
      if (i1 < 0 && n.theta1.approx(r.R0[k])) i1 = static_cast<int>(k);
      if (i2 < 0 && n.theta2.approx(r.R0[k])) i2 = static_cast<int>(k);
    }
    if (i1 < 0 || i2 < 0)
      throw Error("json: representation morphism twists are not in R0");
    r1.push_back({{"theta1", i1}, {"u", to_json(n.u)}, {"theta2", i2}});
  }
  return json{{"r0", std::move(r0)}, {"r1", std::move(r1)}};
}

Representation representation_from_json(const TwoGroup& g, const StarAlgebra& a,
                                        const json& j) {
  Representation r;
  r.group = &g;
  r.algebra = &a;
  for (const json& t : j.at("r0"))
    r.R0.push_back(automorphism_from_json(a, t));
  for (const json& n : j.at("r1")) {
    int i1 = n.at("theta1").get<int>();
    int i2 = n.at("theta2").get<int>();
    if (i1 < 0 || i2 < 0 || i1 >= static_cast<int>(r.R0.size()) ||
        i2 >= static_cast<int>(r.R0.size()))
      throw Error("json: representation theta index out of range");
    r.R1.push_back(
        NElement{r.R0[i1], matrix_from_json(n.at("u")), r.R0[i2]});
  }
  return r;
}

json to_json(const Cover& c) {
  return json{{"base_points", c.base.points}, {"proj", c.proj}};
}

Cover cover_from_json(const json& j) {
  std::vector<int> proj = ints(j.at("proj"));
  return Cover{FiniteSpace{static_cast<int>(proj.size())},
               FiniteSpace{j.at("base_points").get<int>()}, std::move(proj)};
}

json bundle_to_json(const PrincipalTwoBundle& p) {
  return json{{"base_points", p.underlying.base.points},
              {"proj", p.underlying.proj},
              {"action", p.underlying.action},
              {"anchor", p.anchor}};
}

PrincipalTwoBundle bundle_from_json(const TwoGroup& g,
                                    const CrossedModuleOfTwoGroup& crossed,
                                    const json& j) {
  PrincipalBundle b;
  b.group = &crossed.cm.H;
  b.base = FiniteSpace{j.at("base_points").get<int>()};
  b.proj = ints(j.at("proj"));
  b.total = static_cast<int>(b.proj.size());
  b.action = tables(j.at("action"));
  return PrincipalTwoBundle{&g, &crossed, std::move(b), ints(j.at("anchor"))};
}

json gerbe_to_json(const BundleGerbe& q) {
  return json{{"cover", to_json(q.cover())},
              {"p", bundle_to_json(q.p())},
              {"mu", q.mu()}};
}

BundleGerbe gerbe_from_json(const TwoGroup& g,
                            const CrossedModuleOfTwoGroup& crossed,
                            const json& j) {
  Cover cover = cover_from_json(j.at("cover"));
  if (j.contains("cocycle")) {
    const json& c = j.at("cocycle");
    return gerbe_from_cocycle(cover, g, crossed, ints(c.at("g")),
                              ints(c.at("h")));
  }
  return BundleGerbe(std::move(cover), bundle_from_json(g, crossed, j.at("p")),
                     ints(j.at("mu")));
}

json bimodule_to_json(const Bimodule& m) {
  json la = json::array(), ra = json::array();
  for (const CMatrix& x : m.left_action) la.push_back(to_json(x));
  for (const CMatrix& x : m.right_action) ra.push_back(to_json(x));
  return json{{"dim", m.dim},
              {"gram", to_json(m.gram)},
              {"left_action", std::move(la)},
              {"right_action", std::move(ra)}};
}

Bimodule bimodule_from_json(const StarAlgebra& left, const StarAlgebra& right,
                            const json& j) {
  if (j.contains("standard_of")) {
    if (!(left == right))
      throw Error("json: standard bimodule needs equal algebras");
    if (j.contains("twist"))
      return twisted_standard(left, automorphism_from_json(left, j.at("twist")));
    return standard_bimodule(left);
  }
  Bimodule m;
  m.left_alg = &left;
  m.right_alg = &right;
  m.dim = j.at("dim").get<int>();
  m.gram = matrix_from_json(j.at("gram"));
  for (const json& x : j.at("left_action"))
    m.left_action.push_back(matrix_from_json(x));
  for (const json& x : j.at("right_action"))
    m.right_action.push_back(matrix_from_json(x));
  return m;
}

json two_vector_bundle_to_json(const TwoVectorBundle& v) {
  json m = json::array(), mu = json::array();
  for (const Bimodule& x : v.m) m.push_back(bimodule_to_json(x));
  for (const CMatrix& x : v.mu) mu.push_back(to_json(x));
  return json{{"cover", to_json(v.cover)},
              {"algebra", to_json(*v.algebra)},
              {"m", std::move(m)},
              {"mu", std::move(mu)}};
}

TwoVectorBundle two_vector_bundle_from_json(const StarAlgebra& a,
                                            const json& j) {
  TwoVectorBundle v;
  v.cover = cover_from_json(j.at("cover"));
  v.algebra = &a;
  for (const json& x : j.at("m"))
    v.m.push_back(bimodule_from_json(a, a, x));
  for (const json& x : j.at("mu")) v.mu.push_back(matrix_from_json(x));
  return v;
}

json refinement_to_json(const Refinement& r) {
  json phi = json::array(), u = json::array();
  for (const Automorphism& t : r.phi) phi.push_back(to_json(t));
  for (const CMatrix& m : r.u) u.push_back(to_json(m));
  return json{{"rho", r.rho}, {"phi", std::move(phi)}, {"u", std::move(u)}};
}

Refinement refinement_from_json(const TwoVectorBundle& source,
                                const TwoVectorBundle& target, const json& j) {
  Refinement r;
  r.source = &source;
  r.target = &target;
  r.rho = ints(j.at("rho"));
  for (const json& t : j.at("phi"))
    r.phi.push_back(automorphism_from_json(*source.algebra, t));
  for (const json& m : j.at("u")) r.u.push_back(matrix_from_json(m));
  return r;
}

}  // namespace gerbel::json_io
