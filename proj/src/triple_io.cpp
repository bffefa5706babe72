// SPDX-License-Identifier: Apache-2.0

#include "ncg/triple_io.hpp"

#include "ncg/errors.hpp"

#include <fstream>

namespace ncg {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw DomainError("complex number must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw DomainError("matrix must be a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw DomainError("matrix rows must have equal length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
    }
  }
  return m;
}

json triple_to_json(const FiniteTriple& t) {
  json j;
  j["dim_H"] = t.dim;
  j["generators"] = json::array();
  for (const auto& g : t.generators) j["generators"].push_back(matrix_to_json(g));
  j["D_F"] = matrix_to_json(t.dirac);
  j["J_F"] = t.real_structure ? matrix_to_json(*t.real_structure) : json(nullptr);
  j["gamma_F"] = t.grading ? matrix_to_json(*t.grading) : json(nullptr);
  j["labels"] = t.labels;
  return j;
}

FiniteTriple triple_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("triple document must be an object");
  for (const char* key : {"dim_H", "generators", "D_F"}) {
    if (!j.contains(key)) throw DomainError(std::string("triple is missing '") + key + "'");
  }
  FiniteTriple t;
  if (!j["dim_H"].is_number_integer() || j["dim_H"].get<long long>() <= 0) {
    throw DomainError("dim_H must be a positive integer");
  }
  t.dim = j["dim_H"].get<Eigen::Index>();

  auto square = [&](const json& node, const char* what) {
    ComplexMatrix m = matrix_from_json(node);
    if (m.rows() != t.dim || m.cols() != t.dim) {
      throw DomainError(std::string(what) + " must be dim_H x dim_H");
    }
    return m;
  };

  if (!j["generators"].is_array()) throw DomainError("generators must be an array");
  for (const auto& g : j["generators"]) t.generators.push_back(square(g, "generator"));
  t.dirac = square(j["D_F"], "D_F");
  if (j.contains("J_F") && !j["J_F"].is_null()) t.real_structure = square(j["J_F"], "J_F");
  if (j.contains("gamma_F") && !j["gamma_F"].is_null()) t.grading = square(j["gamma_F"], "gamma_F");
  if (j.contains("labels")) {
    t.labels = j["labels"].get<std::vector<std::string>>();
    if (static_cast<Eigen::Index>(t.labels.size()) != t.dim) {
      throw DomainError("labels must name every basis state");
    }
  } else {
    for (Eigen::Index i = 0; i < t.dim; ++i) t.labels.push_back("e" + std::to_string(i));
  }
  t.degenerate = t.dirac.isZero(0.0);
  return t;
}

FiniteTriple load_triple(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open triple file " + path.string());
  return triple_from_json(json::parse(in));
}

}  // namespace ncg
