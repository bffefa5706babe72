// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace ncg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Lower-index spacetime covector (k_0, k_1, k_2, k_3).
using Covector = std::array<double, 4>;
using Vector3 = std::array<double, 3>;

inline constexpr double kDefaultTolerance = 1e-12;

/// Largest absolute entry of A.
double max_abs(const ComplexMatrix& a);

/// Entrywise comparison: max |a_ij - b_ij| <= tol. Shapes must agree.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kDefaultTolerance);

bool is_hermitian(const ComplexMatrix& a, double tol = kDefaultTolerance);

/// Kronecker product a (x) b; index of (i, j) is i * b.rows() + j.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

inline ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

/// Spectral norm (largest singular value), taken from the largest eigenvalue
/// of the Gram matrix a^* a.
double operator_norm(const ComplexMatrix& a);

/// Eigenvalues of a Hermitian matrix in ascending order. Only the lower
/// triangle is read.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& a);

/// Standard basis vector e_index of C^dim.
ComplexVector basis_vector(Eigen::Index dim, Eigen::Index index);

}  // namespace ncg
