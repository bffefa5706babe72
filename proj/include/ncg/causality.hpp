// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncg/clifford.hpp"
#include "ncg/matrix.hpp"

#include <array>
#include <span>

namespace ncg {

/// Minkowski event (t, x) in units with c = 1.
struct Event {
  double t = 0.0;
  Vector3 x{0.0, 0.0, 0.0};
};

/// Pure state (x, i) of the two-sheet space.
struct SheetPoint {
  Event event;
  int sheet = 0;
};

/// Mixed state omega_{x, xi}(a + b) = xi a(x) + (1 - xi) b(x).
struct MixedState {
  Event event;
  double xi = 0.0;
};

/// Flat metric of the five-dimensional ambient spacetime,
/// diag(-1, 1, 1, 1, 1/|m|^2). For m = 0 the fiber is infinitely long and the
/// last entry is +inf.
struct EmbeddingMetric {
  std::array<double, 5> diagonal{};
  Complex m;
  bool infinite_fiber = false;
};

/// x precedes y: y is in the closed future cone of x.
bool minkowski_precedes(const Event& x, const Event& y);

/// -(t_x - t_y)^2 + |x - y|^2.
double extremal_length_sq(const Event& x, const Event& y);

/// Length of the longest causal curve from x to y. Throws CausalityError
/// unless x precedes y.
double proper_time(const Event& x, const Event& y);

/// Two-sheet extremal length squared
///   (4/pi^2) L^2(x, y) + 1/|m|^2  (different sheets)
///   (4/pi^2) L^2(x, y)            (same sheet)
/// +inf for different sheets at m = 0.
double extremal_length_sq_sheets(const SheetPoint& p, const SheetPoint& q, Complex m);

/// Pure-state causal structure: x precedes y and the two-sheet L^2 <= 0.
bool causally_related_pure(const SheetPoint& p, const SheetPoint& q, Complex m);

/// Proper time required to connect the two mixed states,
/// |arcsin sqrt(eta) - arcsin sqrt(xi)| / |m| (0 when xi = eta, +inf when the
/// states differ and m = 0).
double mixed_state_threshold(double xi, double eta, Complex m);

/// Mixed-state criterion: x precedes y and the proper time reaches
/// mixed_state_threshold(xi, eta, m).
bool causally_related_mixed(const MixedState& a, const MixedState& b, Complex m);

struct ConeVerdict {
  bool causal = false;
  /// Largest eigenvalue of J [D, a] over all evaluated points; the element is
  /// causal when this is <= tolerance.
  double worst_eigenvalue = 0.0;
};

/// f(x) = k_mu x^mu + c has [D, f] = -i gamma^mu k_mu; f is causal iff
/// J [D, f] is negative semidefinite.
ConeVerdict check_causal_affine_function(const Covector& gradient, const GammaBasis& basis,
                                         double tol = kDefaultTolerance);

bool is_causal_affine_function(const Covector& gradient, const GammaBasis& basis,
                               double tol = kDefaultTolerance);

/// Affine function k . x + c on one sheet.
struct AffineFunction {
  Covector gradient{0.0, 0.0, 0.0, 0.0};
  double constant = 0.0;

  double operator()(const Event& e) const;
};

/// Sampled cone condition for a = a_0 + a_1 on the two-sheet triple: at each
/// sample event, (J (x) 1_2)(-i gamma^mu (x) diag(d_mu a_0, d_mu a_1)
/// + gamma^5 (x) [D_F, diag(a_0(x), a_1(x))]) must be negative semidefinite.
/// This is a necessary condition restricted to the samples, not a proof of
/// causality everywhere. Throws DomainError on an empty sample set.
ConeVerdict is_causal_element_two_sheet(const AffineFunction& sheet0,
                                        const AffineFunction& sheet1, Complex m,
                                        std::span<const Event> samples, const GammaBasis& basis,
                                        double tol = kDefaultTolerance);

EmbeddingMetric embedding_metric(Complex m);

}  // namespace ncg
