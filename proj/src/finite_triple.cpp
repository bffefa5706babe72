// SPDX-License-Identifier: Apache-2.0

#include "ncg/finite_triple.hpp"

#include "ncg/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncg {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::Matrix2cd quaternion_unit(int which) {
  Eigen::Matrix2cd q;
  switch (which) {
    case 0: q << 1, 0, 0, 1; break;
    case 1: q << 0, kI, kI, 0; break;   // i sigma_1
    case 2: q << 0, 1, -1, 0; break;    // i sigma_2
    default: q << kI, 0, 0, -kI; break; // i sigma_3
  }
  return q;
}

// Residual of projecting `v` onto the column span of `q` (orthonormal columns).
double span_residual(const ComplexMatrix& q, const ComplexVector& v) {
  if (q.cols() == 0) return v.cwiseAbs().maxCoeff();
  const ComplexVector r = v - q * (q.adjoint() * v);
  return r.cwiseAbs().maxCoeff();
}

ComplexVector vectorize(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

}  // namespace

Eigen::Index FiniteTriple::label_index(std::string_view label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw StateError("unknown basis state label '" + std::string(label) + "'");
  }
  return static_cast<Eigen::Index>(it - labels.begin());
}

ComplexMatrix FiniteTriple::conjugate_by_real_structure(const ComplexMatrix& op) const {
  if (!real_structure) throw DomainError("triple has no real structure");
  const ComplexMatrix& u = *real_structure;
  return u * op.conjugate() * u.adjoint();
}

FiniteTriple two_point_triple(Complex m) {
  FiniteTriple t;
  t.dim = 2;
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  t.generators = {p0, p1};
  t.dirac = ComplexMatrix::Zero(2, 2);
  t.dirac(0, 1) = m;
  t.dirac(1, 0) = std::conj(m);
  t.labels = {"sheet0", "sheet1"};
  t.degenerate = (m == Complex{0.0, 0.0});
  return t;
}

const std::vector<std::string>& electroweak_labels() {
  static const std::vector<std::string> labels{
      "nu_R", "e_R", "nu_L", "e_L", "nubar_R", "ebar_R", "nubar_L", "ebar_L"};
  return labels;
}

ComplexMatrix electroweak_representation(Complex lambda, const Eigen::Matrix2cd& q) {
  ComplexMatrix a = ComplexMatrix::Zero(8, 8);
  a(0, 0) = lambda;
  a(1, 1) = std::conj(lambda);
  a.block(2, 2, 2, 2) = q;
  for (Eigen::Index i = 4; i < 8; ++i) a(i, i) = lambda;
  return a;
}

FiniteTriple electroweak_triple(Complex m_e) {
  FiniteTriple t;
  t.dim = 8;
  t.labels = electroweak_labels();

  // Real spanning set of C + H.
  const Eigen::Matrix2cd zero = Eigen::Matrix2cd::Zero();
  t.generators.push_back(electroweak_representation(1.0, zero));
  t.generators.push_back(electroweak_representation(kI, zero));
  for (int k = 0; k < 4; ++k) {
    t.generators.push_back(electroweak_representation(0.0, quaternion_unit(k)));
  }

  // Y maps right-handed to left-handed states; only the electron is massive.
  ComplexMatrix y = ComplexMatrix::Zero(2, 2);
  y(1, 1) = m_e;
  const ComplexMatrix y_bar = y.conjugate();

  ComplexMatrix d = ComplexMatrix::Zero(8, 8);
  d.block(0, 2, 2, 2) = y.adjoint();
  d.block(2, 0, 2, 2) = y;
  d.block(4, 6, 2, 2) = y_bar.adjoint();
  d.block(6, 4, 2, 2) = y_bar;
  t.dirac = d;

  ComplexMatrix swap = ComplexMatrix::Zero(8, 8);
  swap.topRightCorner(4, 4).setIdentity();
  swap.bottomLeftCorner(4, 4).setIdentity();
  t.real_structure = swap;

  ComplexMatrix grading = ComplexMatrix::Zero(8, 8);
  grading.diagonal() << 1, 1, -1, -1, 1, 1, -1, -1;
  t.grading = grading;

  t.degenerate = (m_e == Complex{0.0, 0.0});
  return t;
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return !c.applicable || c.passed; });
}

const AxiomCheck& ValidationReport::check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no axiom check named " + std::string(name));
}

ValidationReport validate_axioms(const FiniteTriple& triple, const GammaBasis& basis,
                                 double tol) {
  const Eigen::Index n = triple.dim;
  if (triple.dirac.rows() != n || triple.dirac.cols() != n) {
    throw DimensionError("validate_axioms: D_F shape does not match dim_H");
  }
  for (const auto& g : triple.generators) {
    if (g.rows() != n || g.cols() != n) {
      throw DimensionError("validate_axioms: generator shape does not match dim_H");
    }
  }

  auto record = [&](std::string name, double residual) {
    return AxiomCheck{std::move(name), true, residual <= tol, residual};
  };
  auto not_applicable = [](std::string name) {
    return AxiomCheck{std::move(name), false, true, 0.0};
  };

  ValidationReport report;
  const ComplexMatrix& d = triple.dirac;
  report.checks.push_back(record("dirac_hermitian", max_abs(d - d.adjoint())));

  // Closure: every product of generators lies in their complex span.
  {
    double residual = 0.0;
    if (!triple.generators.empty()) {
      ComplexMatrix columns(n * n, static_cast<Eigen::Index>(triple.generators.size()));
      for (std::size_t i = 0; i < triple.generators.size(); ++i) {
        columns.col(static_cast<Eigen::Index>(i)) = vectorize(triple.generators[i]);
      }
      Eigen::ColPivHouseholderQR<ComplexMatrix> qr(columns);
      qr.setThreshold(1e-10);
      const Eigen::Index rank = qr.rank();
      const ComplexMatrix q =
          ComplexMatrix(qr.householderQ()).leftCols(rank);
      for (const auto& a : triple.generators) {
        for (const auto& b : triple.generators) {
          residual = std::max(residual, span_residual(q, vectorize(a * b)));
        }
      }
    }
    report.checks.push_back(record("algebra_closure", residual));
  }

  if (triple.real_structure) {
    double zero = 0.0;
    double first = 0.0;
    for (const auto& a : triple.generators) {
      const ComplexMatrix da = commutator(d, a);
      for (const auto& b : triple.generators) {
        const ComplexMatrix opposite = triple.conjugate_by_real_structure(b.adjoint());
        zero = std::max(zero, max_abs(commutator(a, opposite)));
        first = std::max(first, max_abs(commutator(da, opposite)));
      }
    }
    report.checks.push_back(record("order_zero", zero));
    report.checks.push_back(record("first_order", first));
  } else {
    report.checks.push_back(not_applicable("order_zero"));
    report.checks.push_back(not_applicable("first_order"));
  }

  if (triple.grading) {
    const ComplexMatrix& g = *triple.grading;
    double residual = max_abs(g * g - ComplexMatrix::Identity(n, n));
    residual = std::max(residual, max_abs(g - g.adjoint()));
    residual = std::max(residual, max_abs(anticommutator(d, g)));
    for (const auto& a : triple.generators) {
      residual = std::max(residual, max_abs(commutator(a, g)));
    }
    report.checks.push_back(record("grading", residual));
  } else {
    report.checks.push_back(not_applicable("grading"));
  }

  // The almost-commutative Dirac operator must stay Krein anti-self-adjoint;
  // its internal part is gamma^5 (x) D_F.
  {
    const ComplexMatrix internal = kron(basis.gamma5, d);
    report.checks.push_back(
        record("product_krein_antiselfadjoint", max_abs(krein_adjoint(internal, basis) + internal)));
  }
  return report;
}

}  // namespace ncg
