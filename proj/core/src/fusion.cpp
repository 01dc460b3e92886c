#include "gerbel/fusion.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace gerbel {

CMatrix Bimodule::act_left(const AlgebraElement& a) const {
  CVector c = left_alg->vec(a);
  CMatrix m = CMatrix::Zero(dim, dim);
  for (int k = 0; k < left_alg->dim(); ++k) m += c(k) * left_action[k];
  return m;
}

CMatrix Bimodule::act_right(const AlgebraElement& b) const {
  CVector c = right_alg->vec(b);
  CMatrix m = CMatrix::Zero(dim, dim);
  for (int k = 0; k < right_alg->dim(); ++k) m += c(k) * right_action[k];
  return m;
}

Report check_bimodule(const Bimodule& m, Tolerance tol) {
  Report report;
  const auto lb = m.left_alg->basis();
  const auto rb = m.right_alg->basis();
  CMatrix id = CMatrix::Identity(m.dim, m.dim);
  double r = max_abs_diff(m.act_left(m.left_alg->one()), id);
  if (r > tol.eps) report.add("left action", "1 ⊲ ξ = ξ", r);
  r = max_abs_diff(m.act_right(m.right_alg->one()), id);
  if (r > tol.eps) report.add("right action", "ξ ⊳ 1 = ξ", r);
  for (std::size_t i = 0; i < lb.size(); ++i)
    for (std::size_t j = 0; j < lb.size(); ++j) {
      r = max_abs_diff(m.act_left(m.left_alg->mul(lb[i], lb[j])),
                       m.left_action[i] * m.left_action[j]);
      if (r > tol.eps)
        report.add("left (" + std::to_string(i) + "," + std::to_string(j) + ")",
                   "(ab) ⊲ ξ = a ⊲ (b ⊲ ξ)", r);
    }
  for (std::size_t i = 0; i < rb.size(); ++i)
    for (std::size_t j = 0; j < rb.size(); ++j) {
      r = max_abs_diff(m.act_right(m.right_alg->mul(rb[i], rb[j])),
                       m.right_action[j] * m.right_action[i]);
      if (r > tol.eps)
        report.add("right (" + std::to_string(i) + "," + std::to_string(j) + ")",
                   "ξ ⊳ (ab) = (ξ ⊳ a) ⊳ b", r);
    }
  for (std::size_t i = 0; i < lb.size(); ++i)
    for (std::size_t j = 0; j < rb.size(); ++j) {
      r = max_abs_diff(m.left_action[i] * m.right_action[j],
                       m.right_action[j] * m.left_action[i]);
      if (r > tol.eps)
        report.add("pair (" + std::to_string(i) + "," + std::to_string(j) + ")",
                   "left and right actions commute", r);
    }
  for (std::size_t i = 0; i < lb.size(); ++i) {
    r = max_abs_diff(m.left_action[i].adjoint() * m.gram,
                     m.gram * m.act_left(m.left_alg->star(lb[i])));
    if (r > tol.eps)
      report.add("left basis " + std::to_string(i), "⟨a⊲ξ,η⟩ = ⟨ξ,a*⊲η⟩", r);
  }
  for (std::size_t i = 0; i < rb.size(); ++i) {
    r = max_abs_diff(m.right_action[i].adjoint() * m.gram,
                     m.gram * m.act_right(m.right_alg->star(rb[i])));
    if (r > tol.eps)
      report.add("right basis " + std::to_string(i), "⟨ξ⊳b,η⟩ = ⟨ξ,η⊳b*⟩", r);
  }
  return report;
}

Bimodule standard_bimodule(const StarAlgebra& a) {
  Bimodule m;
  m.left_alg = &a;
  m.right_alg = &a;
  m.dim = a.dim();
  m.gram = a.gram();
  for (const auto& e : a.basis()) {
    m.left_action.push_back(a.left_mult_matrix(e));
    m.right_action.push_back(a.right_mult_matrix(e));
  }
  return m;
}

Bimodule twisted_standard(const StarAlgebra& a, const Automorphism& theta) {
  Bimodule m = standard_bimodule(a);
  for (std::size_t k = 0; k < m.right_action.size(); ++k) {
    AlgebraElement e = a.basis()[k];
    m.right_action[k] = a.right_mult_matrix(theta.apply(e));
  }
  return m;
}

Intertwiner Intertwiner::identity(const Bimodule& m) {
  return Intertwiner{m, m, CMatrix::Identity(m.dim, m.dim),
                     Automorphism::identity(*m.left_alg),
                     Automorphism::identity(*m.right_alg)};
}

Report check_intertwiner(const Intertwiner& it, bool require_unitary, Tolerance tol) {
  Report report;
  if (it.u.rows() != it.target.dim || it.u.cols() != it.source.dim) {
    report.add("intertwiner", "shape matches source and target");
    return report;
  }
  for (std::size_t i = 0; i < it.source.left_action.size(); ++i) {
    AlgebraElement e = it.source.left_alg->basis()[i];
    double r = max_abs_diff(it.u * it.source.left_action[i],
                            it.target.act_left(it.left_twist.apply(e)) * it.u);
    if (r > tol.eps)
      report.add("left basis " + std::to_string(i),
                 "U(a ⊲ ξ) = φ₁(a) ⊲ Uξ", r);
  }
  for (std::size_t i = 0; i < it.source.right_action.size(); ++i) {
    AlgebraElement e = it.source.right_alg->basis()[i];
    double r = max_abs_diff(it.u * it.source.right_action[i],
                            it.target.act_right(it.right_twist.apply(e)) * it.u);
    if (r > tol.eps)
      report.add("right basis " + std::to_string(i),
                 "U(ξ ⊳ b) = Uξ ⊳ φ₂(b)", r);
  }
  if (require_unitary && !is_gram_unitary(it.u, it.source.gram, it.target.gram, tol))
    report.add("intertwiner", "⟨Uξ,Uη⟩ = ⟨ξ,η⟩");
  return report;
}

Intertwiner compose(const Intertwiner& f, const Intertwiner& g, Tolerance tol) {
  if (f.source.dim != g.target.dim)
    throw DimensionError("compose(Intertwiner): dimension mismatch");
  return Intertwiner{g.source, f.target, f.u * g.u,
                     f.left_twist.compose(g.left_twist),
                     f.right_twist.compose(g.right_twist)};
}

Fusion fuse(const Bimodule& h, const Bimodule& k, Tolerance tol) {
  if (!(*h.right_alg == *k.left_alg))
    throw Error("fuse: middle algebras disagree");
  const StarAlgebra& b = *h.right_alg;
  const int db = b.dim();
  const int dh = h.dim, dk = k.dim;
  const auto bb = b.basis();

  // Trace pairing T(m,c) = τ(e_c e_m), used to solve for the B-valued inner
  // product: τ(⟨ξ,η⟩_B · b) = ⟨ξ, η ⊳ b⟩ for all b.
  CMatrix pairing(db, db);
  for (int m = 0; m < db; ++m)
    for (int c = 0; c < db; ++c) pairing(m, c) = b.trace(b.mul(bb[c], bb[m]));
  Eigen::PartialPivLU<CMatrix> pairing_lu(pairing);

  // B-valued inner products of the H basis vectors, as left-action matrices
  // on K.
  std::vector<std::vector<CMatrix>> act(dh, std::vector<CMatrix>(dh));
  for (int i = 0; i < dh; ++i)
    for (int j = 0; j < dh; ++j) {
      CVector f(db);
      for (int m = 0; m < db; ++m) {
        CVector hj = CVector::Zero(dh);
        hj(j) = 1.0;
        CVector hi = CVector::Zero(dh);
        hi(i) = 1.0;
        f(m) = hi.adjoint() * h.gram * (h.right_action[m] * hj);
      }
      CVector x = pairing_lu.solve(f);
      act[i][j] = k.act_left(b.unvec(x));
    }

  // Ambient semi-definite form on C^{dh·dk}.
  CMatrix semigram(dh * dk, dh * dk);
  for (int i = 0; i < dh; ++i)
    for (int j = 0; j < dh; ++j)
      semigram.block(i * dk, j * dk, dk, dk) = k.gram * act[i][j];

  // Hermitize against roundoff before the eigendecomposition.
  semigram = 0.5 * (semigram + CMatrix(semigram.adjoint()));
  Eigen::SelfAdjointEigenSolver<CMatrix> es(semigram);
  const auto& ev = es.eigenvalues();
  double cutoff = ev.size() ? ev.cwiseAbs().maxCoeff() * tol.eps : 0.0;
  std::vector<int> keep;
  for (Eigen::Index idx = 0; idx < ev.size(); ++idx)
    if (ev(idx) > cutoff) keep.push_back(static_cast<int>(idx));

  Fusion out;
  out.dim_left = dh;
  out.dim_right = dk;
  out.semigram = semigram;
  out.embed.resize(dh * dk, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    out.embed.col(static_cast<Eigen::Index>(c)) =
        es.eigenvectors().col(keep[c]) / std::sqrt(ev(keep[c]));
  out.coord = out.embed.adjoint() * semigram;

  const int rank = static_cast<int>(keep.size());
  out.module.left_alg = h.left_alg;
  out.module.right_alg = k.right_alg;
  out.module.dim = rank;
  out.module.gram = CMatrix::Identity(rank, rank);
  CMatrix idk = CMatrix::Identity(dk, dk);
  CMatrix idh = CMatrix::Identity(dh, dh);
  for (int m = 0; m < h.left_alg->dim(); ++m)
    out.module.left_action.push_back(out.coord * kron(h.left_action[m], idk) *
                                     out.embed);
  for (int m = 0; m < k.right_alg->dim(); ++m)
    out.module.right_action.push_back(out.coord * kron(idh, k.right_action[m]) *
                                      out.embed);
  return out;
}

Intertwiner fuse_intertwiners(const Intertwiner& u, const Intertwiner& v,
                              const Fusion& source, const Fusion& target,
                              Tolerance tol) {
  if (!u.right_twist.approx(v.left_twist, tol))
    throw Error("fuse_intertwiners: middle twists disagree");
  Intertwiner out{source.module, target.module,
                  target.coord * kron(u.u, v.u) * source.embed, u.left_twist,
                  v.right_twist};
  return out;
}

Intertwiner left_unitor(const Fusion& f, const Bimodule& m, Tolerance tol) {
  if (f.dim_left != m.left_alg->dim() || f.dim_right != m.dim)
    throw DimensionError("left_unitor: fusion does not match the module");
  CMatrix amb(m.dim, f.dim_left * f.dim_right);
  for (int i = 0; i < f.dim_left; ++i)
    for (int c = 0; c < f.dim_right; ++c)
      amb.col(i * f.dim_right + c) = m.left_action[i].col(c);
  Intertwiner out{f.module, m, amb * f.embed, Automorphism::identity(*m.left_alg),
                  Automorphism::identity(*m.right_alg)};
  check_intertwiner(out, true, tol).require("left_unitor");
  return out;
}

Intertwiner right_unitor(const Fusion& f, const Bimodule& m, Tolerance tol) {
  if (f.dim_right != m.right_alg->dim() || f.dim_left != m.dim)
    throw DimensionError("right_unitor: fusion does not match the module");
  CMatrix amb(m.dim, f.dim_left * f.dim_right);
  for (int c = 0; c < f.dim_left; ++c)
    for (int j = 0; j < f.dim_right; ++j)
      amb.col(c * f.dim_right + j) = m.right_action[j].col(c);
  Intertwiner out{f.module, m, amb * f.embed, Automorphism::identity(*m.left_alg),
                  Automorphism::identity(*m.right_alg)};
  check_intertwiner(out, true, tol).require("right_unitor");
  return out;
}

Intertwiner chi(const StarAlgebra& a, const Automorphism& theta1,
                const Automorphism& theta2, const Fusion& f, Tolerance tol) {
  const int d = a.dim();
  if (f.dim_left != d || f.dim_right != d)
    throw DimensionError("chi: fusion is not of twisted standard bimodules");
  CMatrix amb(d, d * d);
  const auto basis = a.basis();
  for (int i = 0; i < d; ++i) {
    CMatrix li = a.left_mult_matrix(basis[i]);
    for (int j = 0; j < d; ++j) amb.col(i * d + j) = li * theta1.action().col(j);
  }
  Intertwiner out{f.module, twisted_standard(a, theta1.compose(theta2)),
                  amb * f.embed, Automorphism::identity(a),
                  Automorphism::identity(a)};
  check_intertwiner(out, true, tol).require("chi");
  return out;
}

Intertwiner functor_T(const NElement& n, Tolerance tol) {
  const StarAlgebra& a = n.theta1.parent();
  NElement l2 = canonical_implementation(n.theta1, tol);
  Intertwiner out{twisted_standard(a, n.theta2), twisted_standard(a, n.theta1),
                  l2.u * n.u.adjoint(), Automorphism::identity(a),
                  Automorphism::identity(a)};
  return out;
}

TripleFusion fuse_triple(const Bimodule& h, const Bimodule& k, const Bimodule& l,
                         Tolerance tol) {
  Fusion hk = fuse(h, k, tol);
  Fusion kl = fuse(k, l, tol);
  Fusion hk_l = fuse(hk.module, l, tol);
  Fusion h_kl = fuse(h, kl.module, tol);
  CMatrix idl = CMatrix::Identity(l.dim, l.dim);
  CMatrix idh = CMatrix::Identity(h.dim, h.dim);
  CMatrix m = h_kl.coord * kron(idh, kl.coord) * kron(hk.embed, idl) *
              hk_l.embed;
  Intertwiner assoc{hk_l.module, h_kl.module, std::move(m),
                    Automorphism::identity(*h.left_alg),
                    Automorphism::identity(*l.right_alg)};
  return TripleFusion{std::move(hk), std::move(hk_l), std::move(kl),
                      std::move(h_kl), std::move(assoc)};
}

Bimodule conjugate(const Bimodule& m) {
  Bimodule c;
  c.left_alg = m.right_alg;
  c.right_alg = m.left_alg;
  c.dim = m.dim;
  c.gram = m.gram.conjugate();
  const auto rb = m.right_alg->basis();
  for (std::size_t i = 0; i < rb.size(); ++i)
    c.left_action.push_back(m.act_right(m.right_alg->star(rb[i])).conjugate());
  const auto lb = m.left_alg->basis();
  for (std::size_t i = 0; i < lb.size(); ++i)
    c.right_action.push_back(m.act_left(m.left_alg->star(lb[i])).conjugate());
  return c;
}

}  // namespace gerbel
