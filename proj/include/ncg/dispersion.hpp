// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncg/clifford.hpp"
#include "ncg/finite_triple.hpp"

#include <string_view>

namespace ncg {

/// Plane wave xi_p exp(i(-E t + p.x)) (x) e_internal. The constant spinor
/// defaults to e_3 (zero-based index 2), whose Krein norm is +1.
struct PlaneWaveMode {
  double energy = 0.0;
  Vector3 momentum{0.0, 0.0, 0.0};
  ComplexVector spinor = default_spinor();
  Eigen::Index internal = 0;

  static ComplexVector default_spinor();
  /// Lower-index covector of the phase: (-E, p).
  Covector phase_covector() const;
};

inline constexpr double kKreinNullTolerance = 1e-10;
inline constexpr double kHarmonicTolerance = 1e-9;

/// D(E, p) = gamma^mu k_mu (x) 1 + gamma^5 (x) internal_dirac with k the phase
/// covector; the momentum-space form of -i dslash (x) 1 + gamma^5 (x) D_F.
ComplexMatrix dirac_momentum(const ComplexMatrix& internal_dirac, const PlaneWaveMode& mode,
                             const GammaBasis& basis);
ComplexMatrix dirac_momentum(const FiniteTriple& triple, const PlaneWaveMode& mode,
                             const GammaBasis& basis);

/// spinor (x) e_internal in C^4 (x) C^n.
ComplexVector mode_vector(const PlaneWaveMode& mode, Eigen::Index internal_dim);

/// (D Psi, D Psi) / (Psi, Psi), evaluated with Krein products only. Throws
/// KreinNullError when |(Psi, Psi)| < 1e-10.
double krein_ratio(const ComplexMatrix& internal_dirac, const PlaneWaveMode& mode,
                   const GammaBasis& basis);
double krein_ratio(const FiniteTriple& triple, const PlaneWaveMode& mode,
                   const GammaBasis& basis);

enum class SpinorKind { Causal, Harmonic, NonCausal };

std::string_view to_string(SpinorKind kind);

struct SpinorClass {
  SpinorKind kind = SpinorKind::Harmonic;
  double ratio = 0.0;
  double tolerance = kHarmonicTolerance;
};

SpinorClass classify_spinor(const FiniteTriple& triple, const PlaneWaveMode& mode,
                            const GammaBasis& basis, double tol = kHarmonicTolerance);
SpinorClass classify_ratio(double ratio, double tol = kHarmonicTolerance);

/// sqrt(|p|^2 + m^2).
double on_shell_energy(const Vector3& p, double m);

/// Mass of an internal basis state, sqrt(<e_i, D_F^2 e_i>).
double internal_mass(const ComplexMatrix& internal_dirac, Eigen::Index index);

}  // namespace ncg
