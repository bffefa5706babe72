// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncg/matrix.hpp"

#include <array>

namespace ncg {

/// Gamma matrices for Minkowski signature (-,+,+,+) together with the
/// chirality matrix and the fundamental symmetry that turns the Krein
/// product on spinors into a positive-definite one.
///
/// Conventions:
///   gamma^0 = i diag(1, 1, -1, -1)              (anti-Hermitian, squares to -1)
///   gamma^k = [[0, sigma_k], [sigma_k, 0]]      (Hermitian, squares to +1)
///   gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 (Hermitian, squares to +1)
///   fundamental symmetry = i gamma^0 = diag(-1, -1, 1, 1)
struct GammaBasis {
  std::array<ComplexMatrix, 4> gamma;
  ComplexMatrix gamma5;
  std::array<double, 4> metric;  // diagonal of g^{mu nu}
  ComplexMatrix fundamental_symmetry;

  /// gamma^mu k_mu for a lower-index covector k.
  ComplexMatrix slash(const Covector& k) const;

  /// fundamental_symmetry (x) 1_n, acting on C^4 (x) C^n.
  ComplexMatrix fundamental_symmetry_on(Eigen::Index internal_dim) const;
};

GammaBasis build_gamma_basis();

/// Indefinite product (phi, psi) = <phi, (J (x) 1_n) psi> on C^4 (x) C^n.
Complex krein_product(const ComplexVector& phi, const ComplexVector& psi,
                      const GammaBasis& basis);

/// Positive-definite product <phi, psi> = (phi, J psi).
Complex hilbert_product(const ComplexVector& phi, const ComplexVector& psi,
                        const GammaBasis& basis);

/// Krein adjoint A^+ = (J (x) 1_n) A^* (J (x) 1_n).
ComplexMatrix krein_adjoint(const ComplexMatrix& a, const GammaBasis& basis);

}  // namespace ncg
