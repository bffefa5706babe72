// SPDX-License-Identifier: Apache-2.0

#include "ncg/fluctuation.hpp"

#include "ncg/dispersion.hpp"
#include "ncg/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ncg {

namespace {

void require_electroweak(const FiniteTriple& t) {
  if (t.dim != 8 || !t.real_structure || t.labels != electroweak_labels() ||
      t.dirac.rows() != 8) {
    throw UnsupportedTriple("inner fluctuations need the electroweak triple");
  }
}

// Quaternion [[u1, -conj(u2)], [u2, conj(u1)]], whose first column is u.
Eigen::Matrix2cd quaternion_with_first_column(const Eigen::Vector2cd& u) {
  Eigen::Matrix2cd q;
  q << u(0), -std::conj(u(1)), u(1), std::conj(u(0));
  return q;
}

}  // namespace

EWAlgebraElement EWAlgebraElement::identity() { return {1.0, Eigen::Matrix2cd::Identity()}; }

EWAlgebraElement EWAlgebraElement::from_quaternion(Complex lambda, Complex alpha, Complex beta) {
  Eigen::Matrix2cd q;
  q << alpha, beta, -std::conj(beta), std::conj(alpha);
  return {lambda, q};
}

bool EWAlgebraElement::is_quaternion(double tol) const {
  return std::abs(q(1, 1) - std::conj(q(0, 0))) <= tol &&
         std::abs(q(1, 0) + std::conj(q(0, 1))) <= tol;
}

ComplexMatrix EWAlgebraElement::represent() const {
  return electroweak_representation(lambda, q);
}

HiggsField HiggsField::broken(double v, double h) { return {Complex(v + h - 1.0, 0.0), 0.0}; }

double HiggsField::doublet_norm_sq() const { return std::norm(h1 + 1.0) + std::norm(h2); }

ComplexMatrix inner_fluctuation(const FiniteTriple& triple,
                                const std::vector<std::pair<EWAlgebraElement, EWAlgebraElement>>& terms) {
  require_electroweak(triple);
  ComplexMatrix one_form = ComplexMatrix::Zero(8, 8);
  for (const auto& [a, b] : terms) {
    one_form += a.represent() * commutator(triple.dirac, b.represent());
  }
  return triple.dirac + one_form + triple.conjugate_by_real_structure(one_form);
}

ComplexMatrix inner_fluctuation(const FiniteTriple& triple, const EWAlgebraElement& a,
                                const EWAlgebraElement& b) {
  return inner_fluctuation(triple, {{a, b}});
}

ComplexMatrix higgs_phi_block(Complex m_e, const HiggsField& f) {
  const Complex m_bar = std::conj(m_e);
  ComplexMatrix phi = ComplexMatrix::Zero(4, 4);
  phi(1, 2) = -m_bar * f.h2;
  phi(1, 3) = m_bar * (f.h1 + 1.0);
  phi(2, 1) = -m_e * std::conj(f.h2);
  phi(3, 1) = m_e * (std::conj(f.h1) + 1.0);
  return phi;
}

ComplexMatrix higgs_phi(Complex m_e, const HiggsField& field) {
  const ComplexMatrix phi = higgs_phi_block(m_e, field);
  ComplexMatrix full = ComplexMatrix::Zero(8, 8);
  full.topLeftCorner(4, 4) = phi;
  full.bottomRightCorner(4, 4) = phi.conjugate();
  return full;
}

std::pair<EWAlgebraElement, EWAlgebraElement> admissible_pair(const HiggsField& f) {
  const Eigen::Vector2cd from(-std::conj(f.h2), -f.h1);
  const Eigen::Vector2cd to(-std::conj(f.h2), std::conj(f.h1));
  Eigen::Matrix2cd rotation = Eigen::Matrix2cd::Identity();
  const double norm_sq = from.squaredNorm();
  if (norm_sq > 0.0) {
    rotation = quaternion_with_first_column(to) * quaternion_with_first_column(from).adjoint() / norm_sq;
  }
  EWAlgebraElement a{1.0, rotation};
  EWAlgebraElement b = EWAlgebraElement::from_quaternion(0.0, std::conj(f.h1), std::conj(f.h2));
  return {a, b};
}

HiggsField extract_higgs(const ComplexMatrix& phi, Complex m_e) {
  if (m_e == Complex{0.0, 0.0}) throw DomainError("extract_higgs: m_e must be nonzero");
  if (phi.rows() < 4 || phi.cols() < 4) throw DimensionError("extract_higgs: matrix too small");
  const Complex m_bar = std::conj(m_e);
  return {phi(1, 3) / m_bar - 1.0, -phi(1, 2) / m_bar};
}

double trace_phi_sq(const ComplexMatrix& phi) {
  if (phi.rows() != phi.cols()) throw DimensionError("trace_phi_sq: matrix is not square");
  const Complex trace = (phi * phi).trace();
  if (std::abs(trace.imag()) > 1e-10) {
    throw NonHermitianError("trace_phi_sq: trace of Phi^2 has an imaginary part");
  }
  return trace.real();
}

double trace_phi_sq_closed_form(Complex m_e, const HiggsField& field) {
  return 2.0 * std::norm(m_e) * field.doublet_norm_sq();
}

double fluctuated_dispersion(const FiniteTriple& triple, Complex m_e, const HiggsField& field,
                             double energy, const Vector3& momentum, std::string_view state_label,
                             const GammaBasis& basis) {
  require_electroweak(triple);
  PlaneWaveMode mode;
  mode.energy = energy;
  mode.momentum = momentum;
  mode.internal = triple.label_index(state_label);

  const ComplexMatrix phi = higgs_phi(m_e, field);
  const ComplexMatrix d = dirac_momentum(phi, mode, basis);

  const double p_sq = momentum[0] * momentum[0] + momentum[1] * momentum[1] +
                      momentum[2] * momentum[2];
  const ComplexMatrix expected =
      (p_sq - energy * energy) * ComplexMatrix::Identity(32, 32) +
      kron(ComplexMatrix::Identity(4, 4), phi * phi);
  const double scale = std::max(1.0, max_abs(d) * max_abs(d));
  if (max_abs(d * d - expected) > kDefaultTolerance * scale) {
    throw InternalError("fluctuated_dispersion: gamma^5 cross terms did not cancel");
  }
  return krein_ratio(phi, mode, basis);
}

double electroweak_mass_sq(Complex m_e, double v, double h, std::string_view state_label) {
  const auto& labels = electroweak_labels();
  if (std::find(labels.begin(), labels.end(), state_label) == labels.end()) {
    throw StateError("unknown electroweak state '" + std::string(state_label) + "'");
  }
  if (state_label.find("nu") != std::string_view::npos) return 0.0;
  return std::norm(m_e) * (v + h) * (v + h);
}

}  // namespace ncg
