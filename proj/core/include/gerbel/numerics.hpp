#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdlib>
#include <vector>

#include "gerbel/report.hpp"

namespace gerbel {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Numerical comparison threshold. All rank decisions go through
/// singular-value thresholding at eps relative to the largest singular value.
struct Tolerance {
  double eps = 1e-9;
};

/// Default tolerance, overridable through the GERBEL_TOLERANCE environment
/// variable (used by the CLI as well).
Tolerance default_tolerance();

bool all_finite(const CMatrix& m);

/// Max entrywise modulus of a - b.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// True iff a and b agree entrywise up to tol.eps. Shapes must match.
bool approx_equal(const CMatrix& a, const CMatrix& b, Tolerance tol = default_tolerance());

bool is_unitary(const CMatrix& u, Tolerance tol = default_tolerance());

/// Unitarity with respect to (possibly different) Gram matrices on the source
/// and target space: u^* G_target u == G_source.
bool is_gram_unitary(const CMatrix& u, const CMatrix& gram_source,
                     const CMatrix& gram_target, Tolerance tol = default_tolerance());

/// Orthonormal basis of the quotient (span vectors)/(span null_relations) of
/// the ambient inner-product space, realized as the orthogonal complement of
/// the relations inside the given span. Singular values below
/// eps * (largest singular value) are treated as zero.
std::vector<CVector> orthonormal_quotient(const std::vector<CVector>& vectors,
                                          const std::vector<CVector>& null_relations,
                                          Tolerance tol = default_tolerance());

/// Kronecker product, row-major convention: (a ⊗ b)(i1*rb+i2, j1*cb+j2) = a(i1,j1) b(i2,j2).
CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace gerbel
