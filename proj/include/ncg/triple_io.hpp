// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncg/finite_triple.hpp"

#include "json.hpp"

#include <filesystem>

namespace ncg {

// Wire format: complex numbers are [re, im]; matrices are row-major arrays of
// rows. A triple document has the fields
//   {"dim_H", "generators", "D_F", "J_F", "gamma_F", "labels"}
// where J_F and gamma_F may be null or absent.

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json triple_to_json(const FiniteTriple& t);
/// Throws DomainError on a structurally invalid document.
FiniteTriple triple_from_json(const nlohmann::json& j);

FiniteTriple load_triple(const std::filesystem::path& path);

}  // namespace ncg
