// SPDX-License-Identifier: Apache-2.0

#include "ncg/distance.hpp"

#include "ncg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace ncg {

namespace {

constexpr double kStateTolerance = 1e-12;
constexpr double kRankTolerance = 1e-10;

void validate_state(const AlgebraState& w, Eigen::Index dim, const char* which) {
  if (static_cast<Eigen::Index>(w.weights.size()) != dim) {
    throw StateError(std::string(which) + ": expected " + std::to_string(dim) + " weights");
  }
  double total = 0.0;
  for (double x : w.weights) {
    if (!std::isfinite(x) || x < -kStateTolerance) {
      throw StateError(std::string(which) + ": weights must be nonnegative");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > kStateTolerance) {
    throw StateError(std::string(which) + ": weights must sum to 1");
  }
}

void require_diagonal_generators(const FiniteTriple& t, double tol) {
  for (const auto& g : t.generators) {
    ComplexMatrix off = g;
    off.diagonal().setZero();
    if (max_abs(off) > tol) {
      throw UnsupportedAlgebra("distance solver needs diagonal (commutative) generators");
    }
  }
}

Eigen::VectorXd weight_difference(const AlgebraState& w1, const AlgebraState& w2) {
  Eigen::VectorXd diff(static_cast<Eigen::Index>(w1.weights.size()));
  for (std::size_t i = 0; i < w1.weights.size(); ++i) {
    diff(static_cast<Eigen::Index>(i)) = w1.weights[i] - w2.weights[i];
  }
  return diff;
}

// Orthonormal basis (columns) of the real diagonals in the span of the
// generators: the self-adjoint part of a *-closed diagonal algebra.
Eigen::MatrixXd self_adjoint_diagonal_basis(const FiniteTriple& t) {
  const Eigen::Index n = t.dim;
  Eigen::MatrixXd raw(n, 2 * static_cast<Eigen::Index>(t.generators.size()));
  for (std::size_t j = 0; j < t.generators.size(); ++j) {
    raw.col(2 * static_cast<Eigen::Index>(j)) = t.generators[j].diagonal().real();
    raw.col(2 * static_cast<Eigen::Index>(j) + 1) = t.generators[j].diagonal().imag();
  }
  if (raw.cols() == 0) return Eigen::MatrixXd(n, 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(raw, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > kRankTolerance * std::max(1.0, s(0))) ++rank;
  return svd.matrixU().leftCols(rank);
}

ComplexMatrix diagonal_commutator(const ComplexMatrix& d, const Eigen::VectorXd& diag) {
  ComplexMatrix x(d.rows(), d.cols());
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) x(i, j) = d(i, j) * (diag(j) - diag(i));
  }
  return x;
}

// Smoothed spectral norm f_p(y) = (sum_i sigma_i^{2p})^{1/(2p)} of
// X(y) = sum_j y_j L_j, together with its gradient. f_p >= ||X|| and
// f_p -> ||X|| as p grows.
class ConstraintMap {
 public:
  explicit ConstraintMap(std::vector<ComplexMatrix> components)
      : components_(std::move(components)) {}

  Eigen::Index dimension() const { return static_cast<Eigen::Index>(components_.size()); }

  ComplexMatrix assemble(const Eigen::VectorXd& y) const {
    ComplexMatrix x = ComplexMatrix::Zero(components_[0].rows(), components_[0].cols());
    for (std::size_t j = 0; j < components_.size(); ++j) {
      x += y(static_cast<Eigen::Index>(j)) * components_[j];
    }
    return x;
  }

  double norm(const Eigen::VectorXd& y) const { return operator_norm(assemble(y)); }

  double smoothed(const Eigen::VectorXd& y, double p, Eigen::VectorXd* gradient) const {
    const ComplexMatrix x = assemble(y);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(x.adjoint() * x);
    if (eig.info() != Eigen::Success) throw InternalError("Gram eigensolver failed");
    const Eigen::VectorXd lambda = eig.eigenvalues().cwiseMax(0.0);
    const double top = std::sqrt(lambda.maxCoeff());
    if (top == 0.0) {
      if (gradient) gradient->setZero(dimension());
      return 0.0;
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
      sum += std::exp(2.0 * p * std::log(std::max(std::sqrt(lambda(i)) / top, 1e-300)));
    }
    const double value = top * std::pow(sum, 1.0 / (2.0 * p));
    if (gradient) {
      gradient->setZero(dimension());
      for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        const double sigma = std::sqrt(lambda(i));
        if (sigma <= 1e-300) continue;
        const double weight = std::exp((2.0 * p - 1.0) * std::log(sigma / value));
        if (weight < 1e-300) continue;
        const ComplexVector v = eig.eigenvectors().col(i);
        const ComplexVector xv = x * v;
        for (Eigen::Index j = 0; j < dimension(); ++j) {
          const double dsigma =
              xv.dot(components_[static_cast<std::size_t>(j)] * v).real() / sigma;
          (*gradient)(j) += weight * dsigma;
        }
      }
    }
    return value;
  }

 private:
  std::vector<ComplexMatrix> components_;
};

// Projected ascent of u.y / f_p(y) on the surface f_p(y) = 1 for an
// increasing sequence of p, returning the final iterate.
Eigen::VectorXd ascend(const ConstraintMap& map, const Eigen::VectorXd& u, Eigen::VectorXd y,
                       int max_iterations) {
  static constexpr double kSchedule[] = {1.0,    4.0,    16.0,   64.0,    256.0,   1024.0,
                                         4096.0, 16384.0, 65536.0, 262144.0, 1048576.0, 1.6e7,
                                         2.6e8};
  const int per_stage = std::max(50, max_iterations / static_cast<int>(std::size(kSchedule)));
  Eigen::VectorXd grad(y.size());

  for (double p : kSchedule) {
    double f = map.smoothed(y, p, &grad);
    if (f == 0.0) return y;
    y /= f;  // the gradient of f_p is invariant under this rescaling
    double value = u.dot(y);
    double step = 0.1 * y.norm() / std::max(u.norm(), 1e-300);
    for (int it = 0; it < per_stage; ++it) {
      const Eigen::VectorXd direction = u - value * grad;
      if (direction.norm() <= 1e-15 * u.norm()) break;
      Eigen::VectorXd trial = y + step * direction;
      Eigen::VectorXd trial_grad(y.size());
      const double tf = map.smoothed(trial, p, &trial_grad);
      if (tf > 0.0) {
        trial /= tf;
        const double trial_value = u.dot(trial);
        if (trial_value > value) {
          y = trial;
          grad = trial_grad;
          value = trial_value;
          step *= 1.5;
          continue;
        }
      }
      step *= 0.5;
      if (step * direction.norm() <= 1e-16 * y.norm()) break;
    }
  }
  return y;
}

}  // namespace

AlgebraState AlgebraState::pure(std::size_t dim, std::size_t index) {
  if (index >= dim) throw StateError("pure state index out of range");
  AlgebraState s;
  s.weights.assign(dim, 0.0);
  s.weights[index] = 1.0;
  return s;
}

AlgebraState AlgebraState::two_point_mixed(double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw StateError("xi must lie in [0, 1]");
  return AlgebraState{{xi, 1.0 - xi}};
}

double AlgebraState::evaluate(const Eigen::VectorXd& diagonal) const {
  double out = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    out += weights[i] * diagonal(static_cast<Eigen::Index>(i));
  }
  return out;
}

DistanceResult connes_distance(const FiniteTriple& triple, const AlgebraState& w1,
                               const AlgebraState& w2, const DistanceOptions& options) {
  const Eigen::Index n = triple.dim;
  validate_state(w1, n, "first state");
  validate_state(w2, n, "second state");
  require_diagonal_generators(triple, options.tolerance);

  DistanceResult result;
  result.maximizer = ComplexMatrix::Zero(n, n);

  const Eigen::MatrixXd basis = self_adjoint_diagonal_basis(triple);
  const Eigen::VectorXd u = basis.transpose() * weight_difference(w1, w2);
  const Eigen::Index k = basis.cols();

  auto finish = [&](DistanceResult r) {
    if (options.oracle) {
      r.oracle = connes_distance_oracle(triple, w1, w2, *options.oracle);
      r.gap = r.infinite() ? kInfiniteDistance : std::abs(r.value - *r.oracle);
    }
    return r;
  };

  if (k == 0 || u.norm() <= options.tolerance) return finish(result);

  // Real linear map y -> [D_F, diag(B y)], flattened to 2 n^2 real rows.
  std::vector<ComplexMatrix> components;
  Eigen::MatrixXd flat(2 * n * n, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    components.push_back(diagonal_commutator(triple.dirac, basis.col(j)));
    const ComplexMatrix& c = components.back();
    for (Eigen::Index e = 0; e < n * n; ++e) {
      flat(2 * e, j) = c.data()[e].real();
      flat(2 * e + 1, j) = c.data()[e].imag();
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(flat, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > kRankTolerance * std::max(scale, 1.0)) ++rank;
  const Eigen::MatrixXd range = svd.matrixV().leftCols(rank);
  const Eigen::MatrixXd kernel = svd.matrixV().rightCols(k - rank);

  // A feasible ray along which the objective grows without bound.
  const Eigen::VectorXd kernel_part = kernel * (kernel.transpose() * u);
  if (kernel_part.norm() > kRankTolerance * u.norm()) {
    result.value = kInfiniteDistance;
    const Eigen::VectorXd dir = basis * (kernel_part / kernel_part.norm());
    result.maximizer.diagonal() = dir.cast<Complex>();
    return finish(result);
  }

  const Eigen::VectorXd reduced_u = range.transpose() * u;
  std::vector<ComplexMatrix> reduced(static_cast<std::size_t>(rank),
                                     ComplexMatrix::Zero(n, n));
  for (Eigen::Index r = 0; r < rank; ++r) {
    for (Eigen::Index j = 0; j < k; ++j) {
      reduced[static_cast<std::size_t>(r)] += range(j, r) * components[static_cast<std::size_t>(j)];
    }
  }
  const ConstraintMap map(std::move(reduced));

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Eigen::VectorXd> starts;
  starts.push_back(reduced_u);
  for (int s = 1; s < std::max(options.starts, 1); ++s) {
    Eigen::VectorXd y(rank);
    for (Eigen::Index i = 0; i < rank; ++i) y(i) = normal(rng);
    if (y.dot(reduced_u) < 0.0) y = -y;
    starts.push_back(y);
  }

  // Each start is independent; the reduction is a deterministic argmax with
  // lowest-index tie-break.
  double best = -1.0;
  Eigen::VectorXd best_y;
  for (const auto& start : starts) {
    Eigen::VectorXd y = ascend(map, reduced_u, start, options.max_iterations);
    const double norm = map.norm(y);
    if (norm <= 0.0) continue;
    y /= norm;
    const double value = std::abs(reduced_u.dot(y));
    if (value > best) {
      best = value;
      best_y = y;
    }
  }
  if (best < 0.0) throw InternalError("distance ascent produced no feasible point");

  result.value = best;
  result.maximizer.diagonal() = (basis * (range * best_y)).cast<Complex>();
  return finish(result);
}

double connes_distance_oracle(const FiniteTriple& triple, const AlgebraState& w1,
                              const AlgebraState& w2, const GridSpec& grid) {
  const Eigen::Index n = triple.dim;
  validate_state(w1, n, "first state");
  validate_state(w2, n, "second state");
  require_diagonal_generators(triple, kDefaultTolerance);
  if (!(grid.step > 0.0)) throw DomainError("grid step must be positive");

  // Coefficient directions: real and imaginary parts of each generator diagonal.
  std::vector<Eigen::VectorXd> directions;
  for (const auto& g : triple.generators) {
    const Eigen::VectorXd re = g.diagonal().real();
    const Eigen::VectorXd im = g.diagonal().imag();
    if (re.cwiseAbs().maxCoeff() > 0.0) directions.push_back(re);
    if (im.cwiseAbs().maxCoeff() > 0.0) directions.push_back(im);
  }
  const std::size_t k = directions.size();
  if (k > 4) throw OracleIntractable("oracle supports at most 4 coefficient directions");
  if (k == 0) return 0.0;

  double radius = 0.0;
  if (grid.radius) {
    radius = *grid.radius;
  } else {
    double coupling = kInfiniteDistance;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const double a = std::abs(triple.dirac(i, j));
        if (i != j && a > 0.0) coupling = std::min(coupling, a);
      }
    }
    if (coupling == kInfiniteDistance) {
      throw OracleIntractable("D_F has no off-diagonal coupling; pass an explicit radius");
    }
    double smallest_entry = kInfiniteDistance;
    for (const auto& d : directions) {
      for (Eigen::Index i = 0; i < n; ++i) {
        if (d(i) != 0.0) smallest_entry = std::min(smallest_entry, std::abs(d(i)));
      }
    }
    radius = static_cast<double>(n - 1) / (2.0 * coupling * smallest_entry);
  }
  if (!(radius > 0.0)) throw DomainError("oracle radius must be positive");

  const double per_axis = std::floor(2.0 * radius / grid.step + 1e-9) + 1.0;
  if (std::pow(per_axis, static_cast<double>(k)) > 4e9) {
    throw OracleIntractable("oracle grid too large");
  }
  const auto points = static_cast<long long>(per_axis);

  Eigen::VectorXd diff(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    diff(i) = w1.weights[static_cast<std::size_t>(i)] - w2.weights[static_cast<std::size_t>(i)];
  }
  std::vector<double> objective_per_direction(k);
  for (std::size_t j = 0; j < k; ++j) objective_per_direction[j] = diff.dot(directions[j]);

  const ComplexMatrix& d = triple.dirac;
  auto feasible = [&](const Eigen::VectorXd& diag) {
    double frob = 0.0;
    double largest = 0.0;
    ComplexMatrix x(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        x(i, j) = d(i, j) * (diag(j) - diag(i));
        const double a = std::norm(x(i, j));
        frob += a;
        largest = std::max(largest, a);
      }
    }
    constexpr double kSlack = 1.0 + 1e-12;
    if (frob <= kSlack) return true;
    if (largest > kSlack) return false;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(x.adjoint() * x, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().maxCoeff() <= kSlack;
  };

  std::vector<long long> index(k, 0);
  Eigen::VectorXd diag(n);
  double best = 0.0;
  while (true) {
    double objective = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      objective += (-radius + static_cast<double>(index[j]) * grid.step) * objective_per_direction[j];
    }
    if (std::abs(objective) > best) {
      diag.setZero();
      for (std::size_t j = 0; j < k; ++j) {
        diag += (-radius + static_cast<double>(index[j]) * grid.step) * directions[j];
      }
      if (feasible(diag)) best = std::abs(objective);
    }
    std::size_t axis = 0;
    while (axis < k && ++index[axis] == points) index[axis++] = 0;
    if (axis == k) break;
  }
  return best;
}

double product_distance_sq(double d_m, double d_f) {
  if (!(d_m >= 0.0) || !(d_f >= 0.0)) {
    throw DomainError("product_distance_sq: distances must be nonnegative");
  }
  return d_m * d_m + d_f * d_f;
}

}  // namespace ncg
