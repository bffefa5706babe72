// SPDX-License-Identifier: Apache-2.0

#include "schema.hpp"

#include "ncg/schemas_embedded.hpp"

#include <stdexcept>

namespace ncg::cli {

using nlohmann::json;

namespace {

bool has_type(const json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  if (type == "number") return doc.is_number();
  if (type == "integer") return doc.is_number_integer();
  throw std::logic_error("schema uses unsupported type '" + type + "'");
}

}  // namespace

const SchemaRegistry& SchemaRegistry::builtin() {
  static const SchemaRegistry registry = [] {
    SchemaRegistry r;
    for (const auto& [name, text] : embedded_schemas()) r.add(name, json::parse(text));
    return r;
  }();
  return registry;
}

void SchemaRegistry::add(const std::string& name, json schema) {
  schemas_[name] = std::move(schema);
}

bool SchemaRegistry::contains(const std::string& name) const { return schemas_.count(name) > 0; }

const json& SchemaRegistry::get(const std::string& name) const {
  const auto it = schemas_.find(name);
  if (it == schemas_.end()) throw std::out_of_range("unknown schema " + name);
  return it->second;
}

std::vector<std::string> SchemaRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : schemas_) out.push_back(name);
  return out;
}

std::vector<std::string> SchemaRegistry::validate(const json& doc,
                                                  const std::string& schema_name) const {
  std::vector<std::string> errors;
  check(doc, get(schema_name), schema_name, "$", errors);
  return errors;
}

std::pair<const json*, std::string> SchemaRegistry::resolve(const std::string& ref,
                                                            const std::string& file) const {
  const auto hash = ref.find('#');
  const std::string target = hash == 0 ? file : ref.substr(0, hash);
  const std::string pointer = hash == std::string::npos ? "" : ref.substr(hash + 1);
  const json& root = get(target);
  return {&root.at(json::json_pointer(pointer)), target};
}

void SchemaRegistry::check(const json& doc, const json& schema, const std::string& file,
                           const std::string& path, std::vector<std::string>& errors) const {
  if (schema.is_boolean()) {
    if (!schema.get<bool>()) errors.push_back(path + ": not allowed");
    return;
  }
  if (schema.contains("$ref")) {
    const auto [target, target_file] = resolve(schema["$ref"].get<std::string>(), file);
    check(doc, *target, target_file, path, errors);
    return;
  }

  if (schema.contains("type")) {
    const json& type = schema["type"];
    bool ok = false;
    if (type.is_array()) {
      for (const auto& t : type) ok = ok || has_type(doc, t.get<std::string>());
    } else {
      ok = has_type(doc, type.get<std::string>());
    }
    if (!ok) {
      errors.push_back(path + ": expected type " + type.dump());
      return;
    }
  }

  if (schema.contains("const") && doc != schema["const"]) {
    errors.push_back(path + ": must equal " + schema["const"].dump());
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& v : schema["enum"]) found = found || v == doc;
    if (!found) errors.push_back(path + ": must be one of " + schema["enum"].dump());
  }
  if (doc.is_number()) {
    const double x = doc.get<double>();
    if (schema.contains("minimum") && x < schema["minimum"].get<double>()) {
      errors.push_back(path + ": below minimum " + schema["minimum"].dump());
    }
    if (schema.contains("maximum") && x > schema["maximum"].get<double>()) {
      errors.push_back(path + ": above maximum " + schema["maximum"].dump());
    }
  }

  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!doc.contains(key.get<std::string>())) {
          errors.push_back(path + ": missing required field '" + key.get<std::string>() + "'");
        }
      }
    }
    const json empty = json::object();
    const json& properties = schema.contains("properties") ? schema["properties"] : empty;
    for (const auto& [key, value] : doc.items()) {
      if (properties.contains(key)) {
        check(value, properties[key], file, path + "." + key, errors);
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"] == false) {
        errors.push_back(path + ": unknown field '" + key + "'");
      }
    }
  }

  if (doc.is_array()) {
    if (schema.contains("minItems") && doc.size() < schema["minItems"].get<std::size_t>()) {
      errors.push_back(path + ": too few items");
    }
    if (schema.contains("maxItems") && doc.size() > schema["maxItems"].get<std::size_t>()) {
      errors.push_back(path + ": too many items");
    }
    if (schema.contains("items")) {
      for (std::size_t i = 0; i < doc.size(); ++i) {
        check(doc[i], schema["items"], file, path + "[" + std::to_string(i) + "]", errors);
      }
    }
  }

  auto count_matches = [&](const json& branches) {
    int matches = 0;
    for (const auto& branch : branches) {
      std::vector<std::string> sub;
      check(doc, branch, file, path, sub);
      if (sub.empty()) ++matches;
    }
    return matches;
  };
  if (schema.contains("oneOf") && count_matches(schema["oneOf"]) != 1) {
    errors.push_back(path + ": must match exactly one alternative");
  }
  if (schema.contains("anyOf") && count_matches(schema["anyOf"]) == 0) {
    errors.push_back(path + ": must match at least one alternative");
  }
}

}  // namespace ncg::cli
