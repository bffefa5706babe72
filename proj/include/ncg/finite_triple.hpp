// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncg/clifford.hpp"
#include "ncg/matrix.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncg {

/// A finite spectral triple (A_F, H_F, D_F) with optional real structure and
/// grading. The algebra is given by the matrices representing a spanning set
/// of A_F on H_F = C^dim.
///
/// The real structure is antiunitary and cannot be a plain matrix: it is
/// stored as the unitary part U of J = U K, K being entrywise conjugation,
/// so that J psi = U conj(psi).
struct FiniteTriple {
  Eigen::Index dim = 0;
  std::vector<ComplexMatrix> generators;
  ComplexMatrix dirac;
  std::optional<ComplexMatrix> real_structure;
  std::optional<ComplexMatrix> grading;
  std::vector<std::string> labels;
  /// D_F vanishes identically (the m = 0 limit of the two-point space).
  bool degenerate = false;

  /// Index of a basis state by label; throws StateError if unknown.
  Eigen::Index label_index(std::string_view label) const;

  /// J op J^{-1} = U conj(op) U^{-1}. Requires a real structure.
  ComplexMatrix conjugate_by_real_structure(const ComplexMatrix& op) const;
};

/// Vector state omega_i(a) = <e_i, a e_i> on H_F.
struct InternalState {
  Eigen::Index index = 0;
};

/// Two-point space A_F = C + C, H_F = C^2, D_F = [[0, m], [conj(m), 0]].
/// m = 0 is accepted and flagged as degenerate.
FiniteTriple two_point_triple(Complex m);

/// Lepton sector with massless neutrino. Basis order:
///   nu_R, e_R, nu_L, e_L, nubar_R, ebar_R, nubar_L, ebar_L
/// with A_F = C + H acting as diag(lambda, conj(lambda), q) on particles and as
/// lambda on antiparticles.
FiniteTriple electroweak_triple(Complex m_e);

/// Labels of the electroweak basis, in order.
const std::vector<std::string>& electroweak_labels();

/// Matrix of (lambda, q) in C + H acting on the electroweak H_F. q is the
/// 2x2 complex form [[alpha, beta], [-conj(beta), conj(alpha)]] of a quaternion.
ComplexMatrix electroweak_representation(Complex lambda, const Eigen::Matrix2cd& q);

struct AxiomCheck {
  std::string name;
  bool applicable = true;
  bool passed = true;
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  /// Throws std::out_of_range for an unknown name.
  const AxiomCheck& check(std::string_view name) const;
};

/// Finite-matrix checks of the spectral triple structure:
///   dirac_hermitian, algebra_closure, order_zero, first_order, grading,
///   product_krein_antiselfadjoint
/// Checks whose data is absent are reported as not applicable.
ValidationReport validate_axioms(const FiniteTriple& triple, const GammaBasis& basis,
                                 double tol = kDefaultTolerance);

}  // namespace ncg
