// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncg/clifford.hpp"
#include "ncg/finite_triple.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace ncg {

/// Element (lambda, q) of C + H; q = [[alpha, beta], [-conj(beta), conj(alpha)]].
struct EWAlgebraElement {
  Complex lambda;
  Eigen::Matrix2cd q = Eigen::Matrix2cd::Identity();

  static EWAlgebraElement identity();
  static EWAlgebraElement from_quaternion(Complex lambda, Complex alpha, Complex beta);

  bool is_quaternion(double tol = kDefaultTolerance) const;
  /// 8x8 action on the electroweak H_F.
  ComplexMatrix represent() const;
};

/// Higgs doublet values at a point: phi = (h1 + 1, h2).
struct HiggsField {
  Complex h1;
  Complex h2;

  /// After symmetry breaking phi = (v + h, 0).
  static HiggsField broken(double v, double h);

  /// |phi|^2 = |h1 + 1|^2 + |h2|^2.
  double doublet_norm_sq() const;
};

/// Phi = D_F + a[D_F, b] + J_F a[D_F, b] J_F^*. Only the scalar sector is
/// generated. A single pair gives a Hermitian Phi only for admissible pairs
/// (see admissible_pair); the sum overload covers general one-forms.
/// Throws UnsupportedTriple unless `triple` has the electroweak shape.
ComplexMatrix inner_fluctuation(const FiniteTriple& triple, const EWAlgebraElement& a,
                                const EWAlgebraElement& b);
ComplexMatrix inner_fluctuation(const FiniteTriple& triple,
                                const std::vector<std::pair<EWAlgebraElement, EWAlgebraElement>>& terms);

/// Particle block phi (4x4) of the fluctuated internal Dirac operator:
/// nonzero entries
///   (e_R, nu_L) = -conj(m) h2          (e_R, e_L) = conj(m)(h1 + 1)
///   (nu_L, e_R) = -m conj(h2)          (e_L, e_R) = m (conj(h1) + 1)
ComplexMatrix higgs_phi_block(Complex m_e, const HiggsField& field);

/// Full Phi = diag(phi, conj(phi)) on H_F.
ComplexMatrix higgs_phi(Complex m_e, const HiggsField& field);

/// A pair (a, b) whose fluctuation reproduces the given Higgs values:
/// a = (1, Q), b = (0, [[conj(h1), conj(h2)], [-h2, h1]]) with Q the
/// quaternion rotating (-conj(h2), -h1) onto (-conj(h2), conj(h1)).
std::pair<EWAlgebraElement, EWAlgebraElement> admissible_pair(const HiggsField& field);

/// Reads (h1, h2) back from the particle block of Phi. Requires m_e != 0.
HiggsField extract_higgs(const ComplexMatrix& phi, Complex m_e);

/// Real trace of Phi^2. Throws NonHermitianError when the imaginary residue
/// exceeds 1e-10.
double trace_phi_sq(const ComplexMatrix& phi);

/// 2 |m_e|^2 |phi|^2: the trace of the squared particle block.
double trace_phi_sq_closed_form(Complex m_e, const HiggsField& field);

/// Builds D_Phi(E, p) = gamma^mu k_mu (x) 1_8 + gamma^5 (x) Phi, checks the
/// square identity D_Phi^2 = (|p|^2 - E^2) 1 + 1 (x) Phi^2, and returns the
/// Krein ratio of the plane wave on the named internal state. Zero means the
/// fluctuated dispersion relation holds for that state.
double fluctuated_dispersion(const FiniteTriple& triple, Complex m_e, const HiggsField& field,
                             double energy, const Vector3& momentum, std::string_view state_label,
                             const GammaBasis& basis);

/// Closed-form mass squared of an electroweak state under (v + h, 0):
/// |m_e|^2 (v + h)^2 for electrons and their antiparticles, 0 for neutrinos.
double electroweak_mass_sq(Complex m_e, double v, double h, std::string_view state_label);

}  // namespace ncg
