#include "gerbel/numerics.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <cstdlib>

namespace gerbel {

Tolerance default_tolerance() {
  Tolerance tol;
  if (const char* env = std::getenv("GERBEL_TOLERANCE")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0) tol.eps = v;
  }
  return tol;
}

bool all_finite(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("max_abs_diff: shape mismatch " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const CMatrix& a, const CMatrix& b, Tolerance tol) {
  return max_abs_diff(a, b) <= tol.eps;
}

bool is_unitary(const CMatrix& u, Tolerance tol) {
  if (u.rows() != u.cols()) return false;
  CMatrix id = CMatrix::Identity(u.rows(), u.cols());
  return max_abs_diff(u.adjoint() * u, id) <= tol.eps &&
         max_abs_diff(u * u.adjoint(), id) <= tol.eps;
}

bool is_gram_unitary(const CMatrix& u, const CMatrix& gram_source,
                     const CMatrix& gram_target, Tolerance tol) {
  return max_abs_diff(u.adjoint() * gram_target * u, gram_source) <= tol.eps;
}

std::vector<CVector> orthonormal_quotient(const std::vector<CVector>& vectors,
                                          const std::vector<CVector>& null_relations,
                                          Tolerance tol) {
  if (vectors.empty()) return {};
  const Eigen::Index dim = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != dim) throw DimensionError("orthonormal_quotient: mixed ambient dimensions");

  // Projector onto the orthogonal complement of the relations.
  CMatrix proj = CMatrix::Identity(dim, dim);
  if (!null_relations.empty()) {
    CMatrix n(dim, static_cast<Eigen::Index>(null_relations.size()));
    for (std::size_t j = 0; j < null_relations.size(); ++j) {
      if (null_relations[j].size() != dim)
        throw DimensionError("orthonormal_quotient: relation dimension mismatch");
      n.col(static_cast<Eigen::Index>(j)) = null_relations[j];
    }
    Eigen::JacobiSVD<CMatrix> svd(n, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    double cutoff = sv.size() ? sv(0) * tol.eps : 0.0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
      if (sv(k) > cutoff) {
        CVector u = svd.matrixU().col(k);
        proj -= u * u.adjoint();
      }
    }
  }

  CMatrix m(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j)
    m.col(static_cast<Eigen::Index>(j)) = proj * vectors[j];

  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double cutoff = sv.size() ? sv(0) * tol.eps : 0.0;
  std::vector<CVector> basis;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > cutoff) basis.push_back(svd.matrixU().col(k));
  return basis;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace gerbel
