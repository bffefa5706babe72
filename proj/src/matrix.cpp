// SPDX-License-Identifier: Apache-2.0

#include "ncg/matrix.hpp"

#include "ncg/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ncg {

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("approx_equal: shape mismatch");
  }
  return max_abs(a - b) <= tol;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a - a.adjoint()) <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  const ComplexMatrix gram = a.adjoint() * a;
  const double top = hermitian_eigenvalues(gram).maxCoeff();
  return std::sqrt(std::max(top, 0.0));
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("hermitian_eigenvalues: matrix is not square");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InternalError("hermitian_eigenvalues: eigensolver did not converge");
  }
  return solver.eigenvalues();
}

ComplexVector basis_vector(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim) {
    throw DimensionError("basis_vector: index out of range");
  }
  ComplexVector e = ComplexVector::Zero(dim);
  e(index) = 1.0;
  return e;
}

}  // namespace ncg
