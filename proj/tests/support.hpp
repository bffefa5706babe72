// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncg/matrix.hpp"

#include <random>

namespace ncg::test {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex random_complex(Rng& rng, double scale = 1.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

inline ComplexMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = random_complex(rng);
  return m;
}

inline ComplexVector random_vector(Rng& rng, Eigen::Index n) {
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = random_complex(rng);
  return v;
}

inline Vector3 random_vector3(Rng& rng, double scale) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

inline double norm_sq(const Vector3& p) { return p[0] * p[0] + p[1] * p[1] + p[2] * p[2]; }

}  // namespace ncg::test
