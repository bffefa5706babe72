// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "support.hpp"

#include "ncg/clifford.hpp"
#include "ncg/errors.hpp"

using namespace ncg;
using ncg::test::Rng;

namespace {

const Complex I{0.0, 1.0};

ComplexMatrix identity4() { return ComplexMatrix::Identity(4, 4); }

}  // namespace

TEST_SUITE("clifford") {

TEST_CASE("anticommutators reproduce the metric exactly") {
  const GammaBasis b = build_gamma_basis();
  const double g[4] = {-1.0, 1.0, 1.0, 1.0};
  for (int mu = 0; mu < 4; ++mu) {
    CHECK(b.metric[mu] == g[mu]);
    for (int nu = 0; nu < 4; ++nu) {
      const ComplexMatrix expected = (mu == nu ? 2.0 * g[mu] : 0.0) * identity4();
      CHECK(anticommutator(b.gamma[mu], b.gamma[nu]) == expected);
    }
  }
}

TEST_CASE("adjointness of the gammas") {
  const GammaBasis b = build_gamma_basis();
  CHECK(ComplexMatrix(b.gamma[0].adjoint()) == ComplexMatrix(-b.gamma[0]));
  for (int k = 1; k < 4; ++k) CHECK(ComplexMatrix(b.gamma[k].adjoint()) == b.gamma[k]);
}

TEST_CASE("chirality matrix") {
  const GammaBasis b = build_gamma_basis();
  CHECK(ComplexMatrix(b.gamma5 * b.gamma5) == identity4());
  CHECK(ComplexMatrix(b.gamma5.adjoint()) == b.gamma5);
  for (int mu = 0; mu < 4; ++mu) {
    CHECK(anticommutator(b.gamma5, b.gamma[mu]) == ComplexMatrix::Zero(4, 4));
  }
  // Product of all four, up to the sign convention.
  const ComplexMatrix product = I * b.gamma[0] * b.gamma[1] * b.gamma[2] * b.gamma[3];
  CHECK((b.gamma5 == product || b.gamma5 == ComplexMatrix(-product)));
}

TEST_CASE("fundamental symmetry") {
  const GammaBasis b = build_gamma_basis();
  CHECK(b.fundamental_symmetry == ComplexMatrix(I * b.gamma[0]));
  CHECK(ComplexMatrix(b.fundamental_symmetry.adjoint()) == b.fundamental_symmetry);
  CHECK(ComplexMatrix(b.fundamental_symmetry * b.fundamental_symmetry) == identity4());
  CHECK(b.fundamental_symmetry_on(3).rows() == 12);
}

TEST_CASE("Krein product on basis spinors") {
  const GammaBasis b = build_gamma_basis();
  CHECK(krein_product(basis_vector(4, 2), basis_vector(4, 2), b) == Complex(1.0, 0.0));
  CHECK(krein_product(basis_vector(4, 0), basis_vector(4, 0), b) == Complex(-1.0, 0.0));
  CHECK(krein_product(basis_vector(4, 0), basis_vector(4, 1), b) == Complex(0.0, 0.0));
}

TEST_CASE("Krein product is conjugate symmetric and the Hilbert product is positive") {
  const GammaBasis b = build_gamma_basis();
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    const ComplexVector phi = test::random_vector(rng, 4 * n);
    const ComplexVector psi = test::random_vector(rng, 4 * n);
    CHECK(std::abs(krein_product(phi, psi, b) - std::conj(krein_product(psi, phi, b))) <= 1e-14);

    const Complex h = hilbert_product(psi, psi, b);
    CHECK(h.real() > 0.0);
    CHECK(std::abs(h.imag()) <= 1e-14);
    const ComplexVector j_psi = b.fundamental_symmetry_on(n) * psi;
    CHECK(std::abs(krein_product(psi, j_psi, b) - psi.squaredNorm()) <= 1e-12);
  }
}

TEST_CASE("Krein adjoint properties") {
  const GammaBasis b = build_gamma_basis();
  Rng rng(12);
  CHECK(krein_adjoint(identity4(), b) == identity4());
  CHECK(krein_adjoint(b.fundamental_symmetry, b) == b.fundamental_symmetry);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 1 + trial % 2;
    const ComplexMatrix A = test::random_matrix(rng, 4 * n, 4 * n);
    const ComplexMatrix B = test::random_matrix(rng, 4 * n, 4 * n);
    CHECK(approx_equal(krein_adjoint(krein_adjoint(A, b), b), A));
    CHECK(approx_equal(krein_adjoint(A * B, b), krein_adjoint(B, b) * krein_adjoint(A, b)));
    const ComplexVector phi = test::random_vector(rng, 4 * n);
    const ComplexVector psi = test::random_vector(rng, 4 * n);
    CHECK(std::abs(krein_product(phi, A * psi, b) - krein_product(krein_adjoint(A, b) * phi, psi, b)) <=
          1e-12);
  }
}

TEST_CASE("momentum-space Dirac matrix adjointness") {
  // gamma^mu k_mu is Krein anti-self-adjoint; -i gamma^mu k_mu is self-adjoint.
  const GammaBasis b = build_gamma_basis();
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Covector k{test::uniform(rng, -5, 5), test::uniform(rng, -5, 5),
                     test::uniform(rng, -5, 5), test::uniform(rng, -5, 5)};
    const ComplexMatrix slash = b.slash(k);
    CHECK(approx_equal(krein_adjoint(slash, b), -slash));
    CHECK(approx_equal(krein_adjoint(ComplexMatrix(-I * slash), b), ComplexMatrix(-I * slash)));
  }
  for (int mu = 0; mu < 4; ++mu) CHECK(krein_adjoint(b.gamma[mu], b) == ComplexMatrix(-b.gamma[mu]));
  CHECK(krein_adjoint(b.gamma5, b) == ComplexMatrix(-b.gamma5));
}

TEST_CASE("slash contracts with a lower-index covector") {
  const GammaBasis b = build_gamma_basis();
  const Covector k{2.0, 0.0, 0.0, 3.0};
  CHECK(b.slash(k) == ComplexMatrix(2.0 * b.gamma[0] + 3.0 * b.gamma[3]));
  // (gamma^mu k_mu)^2 = g^{mu nu} k_mu k_nu = -4 + 9.
  CHECK(approx_equal(b.slash(k) * b.slash(k), 5.0 * identity4()));
}

TEST_CASE("dimension errors") {
  const GammaBasis b = build_gamma_basis();
  CHECK_THROWS_AS(krein_product(ComplexVector::Zero(4), ComplexVector::Zero(8), b), DimensionError);
  CHECK_THROWS_AS(krein_product(ComplexVector::Zero(3), ComplexVector::Zero(3), b), DimensionError);
  CHECK_THROWS_AS(krein_adjoint(ComplexMatrix::Zero(4, 8), b), DimensionError);
  CHECK_THROWS_AS(krein_adjoint(ComplexMatrix::Zero(6, 6), b), DimensionError);
  CHECK_THROWS_AS(approx_equal(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 3)), DimensionError);
}

TEST_CASE("operator norm is the largest singular value") {
  Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix A = test::random_matrix(rng, 5, 5);
    const double svd = Eigen::JacobiSVD<ComplexMatrix>(A).singularValues()(0);
    CHECK(operator_norm(A) == doctest::Approx(svd).epsilon(1e-12));
  }
}

}  // TEST_SUITE
