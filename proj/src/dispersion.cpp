// SPDX-License-Identifier: Apache-2.0

#include "ncg/dispersion.hpp"

#include "ncg/errors.hpp"

#include <cmath>

namespace ncg {

ComplexVector PlaneWaveMode::default_spinor() { return basis_vector(4, 2); }

Covector PlaneWaveMode::phase_covector() const {
  return {-energy, momentum[0], momentum[1], momentum[2]};
}

ComplexMatrix dirac_momentum(const ComplexMatrix& internal_dirac, const PlaneWaveMode& mode,
                             const GammaBasis& basis) {
  const Eigen::Index n = internal_dirac.rows();
  if (internal_dirac.cols() != n) throw DimensionError("dirac_momentum: D_F is not square");
  return kron(basis.slash(mode.phase_covector()), ComplexMatrix::Identity(n, n)) +
         kron(basis.gamma5, internal_dirac);
}

ComplexMatrix dirac_momentum(const FiniteTriple& triple, const PlaneWaveMode& mode,
                             const GammaBasis& basis) {
  return dirac_momentum(triple.dirac, mode, basis);
}

ComplexVector mode_vector(const PlaneWaveMode& mode, Eigen::Index internal_dim) {
  if (mode.spinor.size() != 4) throw DimensionError("mode spinor must have 4 components");
  return kron(mode.spinor, basis_vector(internal_dim, mode.internal));
}

double krein_ratio(const ComplexMatrix& internal_dirac, const PlaneWaveMode& mode,
                   const GammaBasis& basis) {
  const ComplexVector psi = mode_vector(mode, internal_dirac.rows());
  const Complex norm = krein_product(psi, psi, basis);
  if (std::abs(norm) < kKreinNullTolerance) {
    throw KreinNullError("krein_ratio: mode has vanishing Krein norm");
  }
  const ComplexVector d_psi = dirac_momentum(internal_dirac, mode, basis) * psi;
  return (krein_product(d_psi, d_psi, basis) / norm).real();
}

double krein_ratio(const FiniteTriple& triple, const PlaneWaveMode& mode,
                   const GammaBasis& basis) {
  return krein_ratio(triple.dirac, mode, basis);
}

std::string_view to_string(SpinorKind kind) {
  switch (kind) {
    case SpinorKind::Causal: return "Causal";
    case SpinorKind::Harmonic: return "Harmonic";
    case SpinorKind::NonCausal: return "NonCausal";
  }
  return "Unknown";
}

SpinorClass classify_ratio(double ratio, double tol) {
  SpinorClass c;
  c.ratio = ratio;
  c.tolerance = tol;
  if (std::abs(ratio) <= tol) {
    c.kind = SpinorKind::Harmonic;
  } else {
    c.kind = ratio > 0.0 ? SpinorKind::Causal : SpinorKind::NonCausal;
  }
  return c;
}

SpinorClass classify_spinor(const FiniteTriple& triple, const PlaneWaveMode& mode,
                            const GammaBasis& basis, double tol) {
  return classify_ratio(krein_ratio(triple, mode, basis), tol);
}

double on_shell_energy(const Vector3& p, double m) {
  return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m);
}

double internal_mass(const ComplexMatrix& internal_dirac, Eigen::Index index) {
  const ComplexVector column = internal_dirac * basis_vector(internal_dirac.rows(), index);
  return column.norm();
}

}  // namespace ncg
