#include "gerbel/staralg.hpp"

#include <Eigen/LU>

namespace gerbel {

StarAlgebra::StarAlgebra(std::vector<int> block_dims, std::vector<double> weights)
    : block_dims_(std::move(block_dims)), weights_(std::move(weights)) {
  if (block_dims_.empty()) throw Error("StarAlgebra: no blocks");
  for (int n : block_dims_)
    if (n <= 0) throw Error("StarAlgebra: block dimensions must be positive");
  if (weights_.empty()) weights_.assign(block_dims_.size(), 1.0);
  if (weights_.size() != block_dims_.size())
    throw Error("StarAlgebra: weights/block count mismatch");
  for (double w : weights_)
    if (w <= 0.0) throw Error("StarAlgebra: trace weights must be positive");
  dim_ = 0;
  for (int n : block_dims_) {
    offsets_.push_back(dim_);
    dim_ += n * n;
  }
}

CVector StarAlgebra::vec(const AlgebraElement& a) const {
  CVector v(dim_);
  for (std::size_t k = 0; k < block_dims_.size(); ++k) {
    const int n = block_dims_[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v(offsets_[k] + i * n + j) = a.blocks[k](i, j);
  }
  return v;
}

AlgebraElement StarAlgebra::unvec(const CVector& v) const {
  AlgebraElement a{this, {}};
  for (std::size_t k = 0; k < block_dims_.size(); ++k) {
    const int n = block_dims_[k];
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = v(offsets_[k] + i * n + j);
    a.blocks.push_back(std::move(m));
  }
  return a;
}

AlgebraElement StarAlgebra::zero() const {
  AlgebraElement a{this, {}};
  for (int n : block_dims_) a.blocks.push_back(CMatrix::Zero(n, n));
  return a;
}

AlgebraElement StarAlgebra::one() const {
  AlgebraElement a{this, {}};
  for (int n : block_dims_) a.blocks.push_back(CMatrix::Identity(n, n));
  return a;
}

AlgebraElement StarAlgebra::unit(int block, int i, int j) const {
  AlgebraElement a = zero();
  a.blocks[block](i, j) = 1.0;
  return a;
}

std::vector<AlgebraElement> StarAlgebra::basis() const {
  std::vector<AlgebraElement> out;
  for (std::size_t k = 0; k < block_dims_.size(); ++k)
    for (int i = 0; i < block_dims_[k]; ++i)
      for (int j = 0; j < block_dims_[k]; ++j)
        out.push_back(unit(static_cast<int>(k), i, j));
  return out;
}

AlgebraElement StarAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement c{this, {}};
  for (std::size_t k = 0; k < block_dims_.size(); ++k)
    c.blocks.push_back(a.blocks[k] * b.blocks[k]);
  return c;
}

AlgebraElement StarAlgebra::star(const AlgebraElement& a) const {
  AlgebraElement c{this, {}};
  for (std::size_t k = 0; k < block_dims_.size(); ++k)
    c.blocks.push_back(a.blocks[k].adjoint());
  return c;
}

Complex StarAlgebra::trace(const AlgebraElement& a) const {
  Complex t = 0.0;
  for (std::size_t k = 0; k < block_dims_.size(); ++k)
    t += weights_[k] * a.blocks[k].trace();
  return t;
}

Complex StarAlgebra::inner(const AlgebraElement& a, const AlgebraElement& b) const {
  return trace(mul(star(a), b));
}

CMatrix StarAlgebra::gram() const {
  CMatrix g = CMatrix::Zero(dim_, dim_);
  for (std::size_t k = 0; k < block_dims_.size(); ++k) {
    const int n = block_dims_[k];
    for (int e = 0; e < n * n; ++e) g(offsets_[k] + e, offsets_[k] + e) = weights_[k];
  }
  return g;
}

CMatrix StarAlgebra::left_mult_matrix(const AlgebraElement& a) const {
  CMatrix m = CMatrix::Zero(dim_, dim_);
  for (std::size_t k = 0; k < block_dims_.size(); ++k) {
    const int n = block_dims_[k];
    // vec(AX) = (A ⊗ I) vec(X), row-major
    m.block(offsets_[k], offsets_[k], n * n, n * n) =
        kron(a.blocks[k], CMatrix::Identity(n, n));
  }
  return m;
}

CMatrix StarAlgebra::right_mult_matrix(const AlgebraElement& b) const {
  CMatrix m = CMatrix::Zero(dim_, dim_);
  for (std::size_t k = 0; k < block_dims_.size(); ++k) {
    const int n = block_dims_[k];
    // vec(XB) = (I ⊗ Bᵀ) vec(X), row-major
    m.block(offsets_[k], offsets_[k], n * n, n * n) =
        kron(CMatrix::Identity(n, n), b.blocks[k].transpose());
  }
  return m;
}

CMatrix StarAlgebra::conj_matrix() const {
  CMatrix s = CMatrix::Zero(dim_, dim_);
  for (std::size_t k = 0; k < block_dims_.size(); ++k) {
    const int n = block_dims_[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        s(offsets_[k] + i * n + j, offsets_[k] + j * n + i) = 1.0;
  }
  return s;
}

CVector StarAlgebra::modular_conjugation(const CVector& v) const {
  return conj_matrix() * v.conjugate();
}

bool StarAlgebra::is_unitary_element(const AlgebraElement& u, Tolerance tol) const {
  for (std::size_t k = 0; k < block_dims_.size(); ++k) {
    CMatrix id = CMatrix::Identity(block_dims_[k], block_dims_[k]);
    if (max_abs_diff(u.blocks[k].adjoint() * u.blocks[k], id) > tol.eps) return false;
  }
  return true;
}

Automorphism::Automorphism(const StarAlgebra& parent, CMatrix action, bool)
    : parent_(&parent), action_(std::move(action)) {}

Automorphism::Automorphism(const StarAlgebra& parent, CMatrix action, Tolerance tol)
    : parent_(&parent), action_(std::move(action)) {
  if (action_.rows() != parent.dim() || action_.cols() != parent.dim())
    throw DimensionError("Automorphism: action matrix has wrong shape");
  const auto basis = parent.basis();
  // bijectivity
  Eigen::FullPivLU<CMatrix> lu(action_);
  if (!lu.isInvertible()) throw Error("Automorphism: action is not bijective");
  // multiplicativity and star-preservation on the spanning set of matrix units
  for (const auto& a : basis) {
    CVector ta = action_ * parent.vec(a);
    AlgebraElement thea = parent.unvec(ta);
    CVector star_then = action_ * parent.vec(parent.star(a));
    if (max_abs_diff(star_then, parent.vec(parent.star(thea))) > tol.eps)
      throw Error("Automorphism: not *-preserving");
    for (const auto& b : basis) {
      AlgebraElement theb = parent.unvec(action_ * parent.vec(b));
      CVector lhs = action_ * parent.vec(parent.mul(a, b));
      if (max_abs_diff(lhs, parent.vec(parent.mul(thea, theb))) > tol.eps)
        throw Error("Automorphism: not multiplicative");
    }
  }
}

Automorphism Automorphism::identity(const StarAlgebra& a) {
  return Automorphism(a, CMatrix::Identity(a.dim(), a.dim()), true);
}

Automorphism Automorphism::inner(const StarAlgebra& a, const AlgebraElement& u,
                                 Tolerance tol) {
  if (!a.is_unitary_element(u, tol))
    throw Error("Automorphism::inner: element is not unitary");
  CMatrix m = a.left_mult_matrix(u) * a.right_mult_matrix(a.star(u));
  return Automorphism(a, std::move(m), true);
}

AlgebraElement Automorphism::apply(const AlgebraElement& a) const {
  return parent_->unvec(action_ * parent_->vec(a));
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  return Automorphism(*parent_, action_ * other.action_, true);
}

Automorphism Automorphism::inverse() const {
  return Automorphism(*parent_, action_.inverse(), true);
}

bool Automorphism::is_trace_preserving(Tolerance tol) const {
  for (const auto& b : parent_->basis()) {
    Complex d = parent_->trace(apply(b)) - parent_->trace(b);
    if (std::abs(d) > tol.eps) return false;
  }
  return true;
}

Report check_n_element(const NElement& n, Tolerance tol) {
  Report report;
  const StarAlgebra& alg = n.theta1.parent();
  if (!is_gram_unitary(n.u, alg.gram(), alg.gram(), tol))
    report.add("N-element", "U is unitary on L²(A)");
  CMatrix uinv = n.u.inverse();
  const auto basis = alg.basis();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& a = basis[k];
    CMatrix la = alg.left_mult_matrix(a);
    CMatrix ra = alg.right_mult_matrix(a);
    double rl = max_abs_diff(n.u * la * uinv,
                             alg.left_mult_matrix(n.theta1.apply(a)));
    if (rl > tol.eps)
      report.add("basis element " + std::to_string(k),
                 "U(a ⊲ ξ) = θ₁(a) ⊲ Uξ", rl);
    double rr = max_abs_diff(n.u * ra * uinv,
                             alg.right_mult_matrix(n.theta2.apply(a)));
    if (rr > tol.eps)
      report.add("basis element " + std::to_string(k),
                 "U(ξ ⊳ a) = Uξ ⊳ θ₂(a)", rr);
  }
  return report;
}

NElement canonical_implementation(const Automorphism& theta, Tolerance tol) {
  if (!theta.is_trace_preserving(tol))
    throw Error("canonical_implementation: automorphism is not trace-preserving");
  return NElement{theta, theta.action(), theta};
}

std::pair<Automorphism, Automorphism> source_target(const NElement& n, Tolerance tol) {
  const StarAlgebra& alg = n.theta1.parent();
  const int d = alg.dim();
  CMatrix uinv = n.u.inverse();
  CVector one = alg.vec(alg.one());
  CMatrix act1(d, d), act2(d, d);
  const auto basis = alg.basis();
  // θ₁(a) = (U L_a U⁻¹)(1) and θ₂(a) = (U R_a U⁻¹)(1); then verify that the
  // full intertwining relations hold with these candidates.
  for (int k = 0; k < d; ++k) {
    act1.col(k) = n.u * alg.left_mult_matrix(basis[k]) * uinv * one;
    act2.col(k) = n.u * alg.right_mult_matrix(basis[k]) * uinv * one;
  }
  Automorphism theta1(alg, std::move(act1), tol);
  Automorphism theta2(alg, std::move(act2), tol);
  NElement candidate{theta1, n.u, theta2};
  check_n_element(candidate, tol).require("source_target: U does not implement any pair");
  if (!theta1.approx(n.theta1, tol) || !theta2.approx(n.theta2, tol))
    throw Error("source_target: recovered automorphisms disagree with stored ones");
  return {std::move(theta1), std::move(theta2)};
}

NElement compose_in_UA(const NElement& u, const NElement& v, Tolerance tol) {
  if (!u.theta2.approx(v.theta1, tol))
    throw Error("compose_in_UA: s(U) != t(V)");
  NElement mid = canonical_implementation(u.theta2, tol);
  CMatrix w = u.u * mid.u.adjoint() * v.u;
  return NElement{u.theta1, std::move(w), v.theta2};
}

NElement conjugate_by_modular(const NElement& n, Tolerance tol) {
  const StarAlgebra& alg = n.theta1.parent();
  CMatrix s = alg.conj_matrix();
  // (JUJ)(v) = S conj(U S conj(v)); as a complex-linear map this is S conj(U) S.
  CMatrix juj = s * n.u.conjugate() * s;
  NElement out{n.theta2, std::move(juj), n.theta1};
  check_n_element(out, tol).require("conjugate_by_modular");
  return out;
}

namespace {

int find_object(const std::vector<Automorphism>& objects, const Automorphism& theta,
                Tolerance tol) {
  for (std::size_t k = 0; k < objects.size(); ++k)
    if (objects[k].approx(theta, tol)) return static_cast<int>(k);
  return -1;
}

int find_morphism(const std::vector<NElement>& morphisms, const CMatrix& u,
                  Tolerance tol) {
  for (std::size_t k = 0; k < morphisms.size(); ++k)
    if (approx_equal(morphisms[k].u, u, tol)) return static_cast<int>(k);
  return -1;
}

}  // namespace

TwoGroup build_UA(const UACarrier& carrier, Tolerance tol) {
  const StarAlgebra& alg = *carrier.algebra;
  const int n0 = static_cast<int>(carrier.objects.size());
  const int n1 = static_cast<int>(carrier.morphisms.size());
  if (n0 == 0 || n1 == 0) throw Error("build_UA: empty carrier");
  for (const auto& m : carrier.morphisms)
    check_n_element(m, tol).require("build_UA: carrier morphism");

  std::vector<std::vector<int>> mul0(n0, std::vector<int>(n0));
  for (int a = 0; a < n0; ++a)
    for (int b = 0; b < n0; ++b) {
      int c = find_object(carrier.objects,
                          carrier.objects[a].compose(carrier.objects[b]), tol);
      if (c < 0)
        throw Error("build_UA: object carrier not closed under composition at (" +
                    std::to_string(a) + "," + std::to_string(b) + ")");
      mul0[a][b] = c;
    }
  int id0 = find_object(carrier.objects, Automorphism::identity(alg), tol);
  if (id0 < 0) throw Error("build_UA: object carrier lacks the identity");

  std::vector<std::vector<int>> mul1(n1, std::vector<int>(n1));
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b) {
      int c = find_morphism(carrier.morphisms,
                            carrier.morphisms[a].u * carrier.morphisms[b].u, tol);
      if (c < 0)
        throw Error("build_UA: morphism carrier not closed under product at (" +
                    std::to_string(a) + "," + std::to_string(b) + ")");
      mul1[a][b] = c;
    }
  int id1 = find_morphism(carrier.morphisms,
                          CMatrix::Identity(alg.dim(), alg.dim()), tol);
  if (id1 < 0) throw Error("build_UA: morphism carrier lacks the identity");

  TwoGroup g{FiniteGroup(std::move(mul0), id0, "Aut-carrier"),
             FiniteGroup(std::move(mul1), id1, "N-carrier"),
             {}, {}, {}};
  g.s.resize(n1);
  g.t.resize(n1);
  g.i.resize(n0);
  for (int x = 0; x < n1; ++x) {
    auto [t_of_u, s_of_u] = source_target(carrier.morphisms[x], tol);
    g.t[x] = find_object(carrier.objects, t_of_u, tol);
    g.s[x] = find_object(carrier.objects, s_of_u, tol);
    if (g.s[x] < 0 || g.t[x] < 0)
      throw Error("build_UA: carrier not closed under s/t at morphism " +
                  std::to_string(x));
  }
  for (int a = 0; a < n0; ++a) {
    NElement l2 = canonical_implementation(carrier.objects[a], tol);
    g.i[a] = find_morphism(carrier.morphisms, l2.u, tol);
    if (g.i[a] < 0)
      throw Error("build_UA: carrier missing canonical implementation of object " +
                  std::to_string(a));
  }
  check_two_group(g).require("build_UA result");
  return g;
}

Report check_representation(const Representation& rep, Tolerance tol) {
  Report report;
  const TwoGroup& g = *rep.group;
  if (static_cast<int>(rep.R0.size()) != g.G0.order() ||
      static_cast<int>(rep.R1.size()) != g.G1.order()) {
    report.add("representation", "R0/R1 totality");
    return report;
  }
  for (int a = 0; a < g.G0.order(); ++a)
    for (int b = 0; b < g.G0.order(); ++b) {
      double r = max_abs_diff(rep.R0[g.G0.mul(a, b)].action(),
                              rep.R0[a].compose(rep.R0[b]).action());
      if (r > tol.eps)
        report.add("objects (" + std::to_string(a) + "," + std::to_string(b) + ")",
                   "R0(ab) = R0(a)R0(b)", r);
    }
  for (int x = 0; x < g.G1.order(); ++x)
    for (int y = 0; y < g.G1.order(); ++y) {
      double r = max_abs_diff(rep.R1[g.G1.mul(x, y)].u, rep.R1[x].u * rep.R1[y].u);
      if (r > tol.eps)
        report.add("morphisms (" + std::to_string(x) + "," + std::to_string(y) + ")",
                   "R1(XY) = R1(X)R1(Y)", r);
    }
  for (int x = 0; x < g.G1.order(); ++x) {
    Report n = check_n_element(rep.R1[x], tol);
    if (!n.ok()) {
      report.add("morphism " + std::to_string(x), "R1(X) ∈ N(A)");
      continue;
    }
    double rs = max_abs_diff(rep.R1[x].theta2.action(), rep.R0[g.s[x]].action());
    if (rs > tol.eps)
      report.add("morphism " + std::to_string(x), "R0 ∘ s = s ∘ R1", rs);
    double rt = max_abs_diff(rep.R1[x].theta1.action(), rep.R0[g.t[x]].action());
    if (rt > tol.eps)
      report.add("morphism " + std::to_string(x), "R0 ∘ t = t ∘ R1", rt);
  }
  for (int a = 0; a < g.G0.order(); ++a) {
    NElement l2 = canonical_implementation(rep.R0[a], tol);
    double r = max_abs_diff(rep.R1[g.i[a]].u, l2.u);
    if (r > tol.eps)
      report.add("object " + std::to_string(a), "R1 ∘ i = L² ∘ R0", r);
  }
  if (!report.ok()) return report;
  // Composition preservation follows; spot-verify on all composable pairs.
  for (int x = 0; x < g.G1.order(); ++x)
    for (int y = 0; y < g.G1.order(); ++y) {
      if (g.s[x] != g.t[y]) continue;
      NElement lhs = rep.R1[compose(g, x, y)];
      NElement rhs = compose_in_UA(rep.R1[x], rep.R1[y], tol);
      double r = max_abs_diff(lhs.u, rhs.u);
      if (r > tol.eps)
        report.add("composable (" + std::to_string(x) + "," + std::to_string(y) + ")",
                   "R1(X ∘ Y) = R1(X) ∘ R1(Y)", r);
    }
  return report;
}

}  // namespace gerbel
