#include <doctest.h>

#include "gerbel/numerics.hpp"

using namespace gerbel;

namespace {
const Tolerance tol{1e-9};
}

TEST_CASE("approx_equal basics") {
  CMatrix i2 = CMatrix::Identity(2, 2);
  CHECK(approx_equal(i2, i2, tol));
  CMatrix perturbed = i2;
  perturbed(0, 0) += 1e-6;
  CHECK_FALSE(approx_equal(i2, perturbed, tol));
  CMatrix sx(2, 2);
  sx << 0, 1, 1, 0;
  CHECK(approx_equal(sx, sx.adjoint(), tol));
}

TEST_CASE("orthonormal_quotient") {
  CVector e1 = CVector::Unit(3, 0), e2 = CVector::Unit(3, 1);
  SUBCASE("one relation collapses a pair") {
    std::vector<CVector> basis = orthonormal_quotient({e1, e2}, {e1 - e2}, tol);
    REQUIRE(basis.size() == 1);
    // Basis vector proportional to e1 + e2.
    CVector expect = (e1 + e2) / std::sqrt(2.0);
    Complex phase = basis[0].dot(expect);
    CHECK(std::abs(std::abs(phase) - 1.0) < 1e-9);
  }
  SUBCASE("no relations") {
    std::vector<CVector> basis = orthonormal_quotient({e1}, {}, tol);
    REQUIRE(basis.size() == 1);
    CHECK(std::abs(std::abs(basis[0].dot(e1)) - 1.0) < 1e-9);
  }
  SUBCASE("full quotient is empty") {
    CHECK(orthonormal_quotient({e1, e2}, {e1, e2}, tol).empty());
  }
  SUBCASE("orthonormality and orthogonality to relations") {
    CVector v = e1 + 2.0 * e2;
    std::vector<CVector> basis = orthonormal_quotient({e1, e2, v}, {v}, tol);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(std::abs(std::abs(basis[i].norm()) - 1.0) < 1e-9);
      CHECK(std::abs(basis[i].dot(v)) < 1e-9);
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        CHECK(std::abs(basis[i].dot(basis[j])) < 1e-9);
    }
  }
}

TEST_CASE("kron follows the row-major convention") {
  CMatrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  CMatrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1) == Complex(1, 0));  // a(0,0) b(0,1)
  CHECK(k(2, 1) == Complex(3, 0));  // a(1,0) b(0,1)
}
