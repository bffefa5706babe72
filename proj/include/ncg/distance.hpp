// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncg/finite_triple.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace ncg {

/// Convex combination of the vector states omega_i(a) = <e_i, a e_i> on H_F.
/// Pure states are the basis vertices.
struct AlgebraState {
  std::vector<double> weights;

  static AlgebraState pure(std::size_t dim, std::size_t index);
  /// omega_xi(a0 + a1) = xi a0 + (1 - xi) a1 on the two-point space.
  static AlgebraState two_point_mixed(double xi);

  double evaluate(const Eigen::VectorXd& diagonal) const;
};

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

struct DistanceResult {
  double value = 0.0;  // kInfiniteDistance when unbounded
  ComplexMatrix maximizer;
  std::optional<double> oracle;
  std::optional<double> gap;

  bool infinite() const { return value == kInfiniteDistance; }
};

struct GridSpec {
  double step = 1e-3;
  /// Half-width of the coefficient box. Defaults to a bound derived from the
  /// smallest nonzero off-diagonal entry of D_F.
  std::optional<double> radius;
};

struct DistanceOptions {
  int starts = 16;
  std::uint64_t seed = 20170101;
  int max_iterations = 4000;
  double tolerance = kDefaultTolerance;
  /// When set, the brute-force oracle is also run and `gap` is filled.
  std::optional<GridSpec> oracle;
};

/// Connes' spectral distance
///   sup { |w1(a) - w2(a)| : a = a^*, ||[D_F, a]|| <= 1 }
/// over a commutative algebra represented by diagonal generators.
/// The constraint is parameterized by real coefficients over an orthonormal
/// basis of the self-adjoint diagonal elements; directions annihilated by the
/// commutator map are split off (nonzero objective along one gives +inf) and
/// the rest is solved by multi-start projected ascent on the constraint surface.
DistanceResult connes_distance(const FiniteTriple& triple, const AlgebraState& w1,
                               const AlgebraState& w2, const DistanceOptions& options = {});

/// Exhaustive grid search over real generator coefficients. Returns the best
/// feasible objective, a lower bound for the true supremum. At most 4
/// coefficient directions are supported.
double connes_distance_oracle(const FiniteTriple& triple, const AlgebraState& w1,
                              const AlgebraState& w2, const GridSpec& grid = {});

/// Pythagorean composition d^2 = d_M^2 + d_F^2 for product geometries.
double product_distance_sq(double d_m, double d_f);

}  // namespace ncg
