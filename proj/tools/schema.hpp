// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncg::cli {

/// Validator for the subset of JSON Schema used by the published schemas:
/// type, properties, required, additionalProperties (boolean), items,
/// minItems, maxItems, enum, const, oneOf, anyOf, minimum, maximum and $ref
/// ("#/pointer" or "other.schema.json#/pointer").
class SchemaRegistry {
 public:
  /// Registry holding the schemas compiled into the binary.
  static const SchemaRegistry& builtin();

  void add(const std::string& name, nlohmann::json schema);
  bool contains(const std::string& name) const;
  const nlohmann::json& get(const std::string& name) const;
  std::vector<std::string> names() const;

  /// Empty when `doc` conforms; otherwise one message per violation found.
  std::vector<std::string> validate(const nlohmann::json& doc, const std::string& schema_name) const;

 private:
  void check(const nlohmann::json& doc, const nlohmann::json& schema, const std::string& file,
             const std::string& path, std::vector<std::string>& errors) const;
  std::pair<const nlohmann::json*, std::string> resolve(const std::string& ref,
                                                        const std::string& file) const;

  std::map<std::string, nlohmann::json> schemas_;
};

}  // namespace ncg::cli
