// SPDX-License-Identifier: Apache-2.0

#include "ncg/clifford.hpp"

#include "ncg/errors.hpp"

namespace ncg {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::Index internal_dimension(Eigen::Index total, const char* where) {
  if (total <= 0 || total % 4 != 0) {
    throw DimensionError(std::string(where) + ": dimension must be a positive multiple of 4");
  }
  return total / 4;
}

}  // namespace

ComplexMatrix GammaBasis::slash(const Covector& k) const {
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (std::size_t mu = 0; mu < 4; ++mu) out += k[mu] * gamma[mu];
  return out;
}

ComplexMatrix GammaBasis::fundamental_symmetry_on(Eigen::Index internal_dim) const {
  return kron(fundamental_symmetry, ComplexMatrix::Identity(internal_dim, internal_dim));
}

GammaBasis build_gamma_basis() {
  Eigen::Matrix2cd sigma1, sigma2, sigma3;
  sigma1 << 0, 1, 1, 0;
  sigma2 << 0, -kI, kI, 0;
  sigma3 << 1, 0, 0, -1;

  GammaBasis b;
  b.metric = {-1.0, 1.0, 1.0, 1.0};

  b.gamma[0] = ComplexMatrix::Zero(4, 4);
  b.gamma[0].diagonal() << kI, kI, -kI, -kI;

  const std::array<Eigen::Matrix2cd, 3> pauli{sigma1, sigma2, sigma3};
  for (std::size_t k = 0; k < 3; ++k) {
    ComplexMatrix g = ComplexMatrix::Zero(4, 4);
    g.topRightCorner(2, 2) = pauli[k];
    g.bottomLeftCorner(2, 2) = pauli[k];
    b.gamma[k + 1] = g;
  }

  // The bare product squares to -1; the factor i makes it a Hermitian
  // involution. Its entries are necessarily imaginary in this representation.
  b.gamma5 = kI * b.gamma[0] * b.gamma[1] * b.gamma[2] * b.gamma[3];
  b.fundamental_symmetry = kI * b.gamma[0];
  return b;
}

Complex krein_product(const ComplexVector& phi, const ComplexVector& psi,
                      const GammaBasis& basis) {
  if (phi.size() != psi.size()) throw DimensionError("krein_product: size mismatch");
  const Eigen::Index n = internal_dimension(phi.size(), "krein_product");
  return phi.dot(basis.fundamental_symmetry_on(n) * psi);
}

Complex hilbert_product(const ComplexVector& phi, const ComplexVector& psi,
                        const GammaBasis& basis) {
  if (phi.size() != psi.size()) throw DimensionError("hilbert_product: size mismatch");
  const Eigen::Index n = internal_dimension(phi.size(), "hilbert_product");
  return krein_product(phi, basis.fundamental_symmetry_on(n) * psi, basis);
}

ComplexMatrix krein_adjoint(const ComplexMatrix& a, const GammaBasis& basis) {
  if (a.rows() != a.cols()) throw DimensionError("krein_adjoint: matrix is not square");
  const ComplexMatrix j = basis.fundamental_symmetry_on(internal_dimension(a.rows(), "krein_adjoint"));
  return j * a.adjoint() * j;
}

}  // namespace ncg
