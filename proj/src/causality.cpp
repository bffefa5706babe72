// SPDX-License-Identifier: Apache-2.0

#include "ncg/causality.hpp"

#include "ncg/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace ncg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr Complex kI{0.0, 1.0};

double spatial_distance_sq(const Event& x, const Event& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double d = y.x[i] - x.x[i];
    s += d * d;
  }
  return s;
}

double largest_eigenvalue_checked(const ComplexMatrix& m, const char* where) {
  if (!is_hermitian(m, 1e-10 * std::max(1.0, max_abs(m)))) {
    throw InternalError(std::string(where) + ": cone matrix is not Hermitian");
  }
  return hermitian_eigenvalues(m).maxCoeff();
}

}  // namespace

bool minkowski_precedes(const Event& x, const Event& y) {
  const double dt = y.t - x.t;
  return dt >= 0.0 && spatial_distance_sq(x, y) <= dt * dt;
}

double extremal_length_sq(const Event& x, const Event& y) {
  const double dt = x.t - y.t;
  return -dt * dt + spatial_distance_sq(x, y);
}

double proper_time(const Event& x, const Event& y) {
  if (!minkowski_precedes(x, y)) {
    throw CausalityError("proper_time: events are not causally ordered");
  }
  return std::sqrt(std::max(0.0, -extremal_length_sq(x, y)));
}

double extremal_length_sq_sheets(const SheetPoint& p, const SheetPoint& q, Complex m) {
  using std::numbers::pi;
  const double l2 = extremal_length_sq(p.event, q.event);
  if (p.sheet == q.sheet) return 4.0 * l2 / (pi * pi);
  const double modulus = std::abs(m);
  if (modulus == 0.0) return kInf;
  // (4 L^2 + (pi/|m|)^2) / pi^2: at the threshold dt = pi/(2|m|) both terms
  // cancel exactly in floating point.
  const double fiber = pi / modulus;
  return (4.0 * l2 + fiber * fiber) / (pi * pi);
}

bool causally_related_pure(const SheetPoint& p, const SheetPoint& q, Complex m) {
  return minkowski_precedes(p.event, q.event) && extremal_length_sq_sheets(p, q, m) <= 0.0;
}

double mixed_state_threshold(double xi, double eta, Complex m) {
  if (!(xi >= 0.0 && xi <= 1.0) || !(eta >= 0.0 && eta <= 1.0)) {
    throw StateError("mixed-state parameters must lie in [0, 1]");
  }
  const double gap = std::abs(std::asin(std::sqrt(eta)) - std::asin(std::sqrt(xi)));
  if (gap == 0.0) return 0.0;
  const double modulus = std::abs(m);
  return modulus == 0.0 ? kInf : gap / modulus;
}

bool causally_related_mixed(const MixedState& a, const MixedState& b, Complex m) {
  const double threshold = mixed_state_threshold(a.xi, b.xi, m);
  if (!minkowski_precedes(a.event, b.event)) return false;
  if (std::abs(m) == 0.0) return a.xi == b.xi;
  return proper_time(a.event, b.event) >= threshold;
}

ConeVerdict check_causal_affine_function(const Covector& gradient, const GammaBasis& basis,
                                         double tol) {
  const ComplexMatrix commutator_df = -kI * basis.slash(gradient);
  const ComplexMatrix form = basis.fundamental_symmetry * commutator_df;
  const double worst = largest_eigenvalue_checked(form, "check_causal_affine_function");
  return {worst <= tol, worst};
}

bool is_causal_affine_function(const Covector& gradient, const GammaBasis& basis, double tol) {
  return check_causal_affine_function(gradient, basis, tol).causal;
}

double AffineFunction::operator()(const Event& e) const {
  return gradient[0] * e.t + gradient[1] * e.x[0] + gradient[2] * e.x[1] +
         gradient[3] * e.x[2] + constant;
}

ConeVerdict is_causal_element_two_sheet(const AffineFunction& sheet0,
                                        const AffineFunction& sheet1, Complex m,
                                        std::span<const Event> samples, const GammaBasis& basis,
                                        double tol) {
  if (samples.empty()) throw DomainError("is_causal_element_two_sheet: no sample events");

  // The derivative part is constant for affine functions.
  ComplexMatrix derivative = ComplexMatrix::Zero(8, 8);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    ComplexMatrix slope = ComplexMatrix::Zero(2, 2);
    slope(0, 0) = sheet0.gradient[mu];
    slope(1, 1) = sheet1.gradient[mu];
    derivative += kron(-kI * basis.gamma[mu], slope);
  }
  const ComplexMatrix j = basis.fundamental_symmetry_on(2);

  ConeVerdict verdict{true, -kInf};
  for (const Event& e : samples) {
    const double a0 = sheet0(e);
    const double a1 = sheet1(e);
    ComplexMatrix internal = ComplexMatrix::Zero(2, 2);
    internal(0, 1) = m * (a1 - a0);
    internal(1, 0) = std::conj(m) * (a0 - a1);
    const ComplexMatrix form = j * (derivative + kron(basis.gamma5, internal));
    const double worst = largest_eigenvalue_checked(form, "is_causal_element_two_sheet");
    verdict.worst_eigenvalue = std::max(verdict.worst_eigenvalue, worst);
  }
  verdict.causal = verdict.worst_eigenvalue <= tol;
  return verdict;
}

EmbeddingMetric embedding_metric(Complex m) {
  EmbeddingMetric g;
  g.m = m;
  const double modulus = std::abs(m);
  g.infinite_fiber = modulus == 0.0;
  g.diagonal = {-1.0, 1.0, 1.0, 1.0, g.infinite_fiber ? kInf : 1.0 / (modulus * modulus)};
  return g;
}

}  // namespace ncg
