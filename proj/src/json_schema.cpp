#include "entlab/json_schema.hpp"

namespace entlab::json_schema {

using nlohmann::json;

namespace {

bool type_matches(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "number") return value.is_number();
  if (type == "integer") return value.is_number_integer();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

}  // namespace

std::vector<std::string> validate(const json& value, const json& schema,
                                  const std::string& path) {
  std::vector<std::string> problems;

  if (schema.contains("type")) {
    const auto type = schema["type"].get<std::string>();
    if (!type_matches(value, type)) {
      problems.push_back(path + ": expected " + type);
      return problems;  // cascading checks would only add noise
    }
  }
  if (schema.contains("const") && value != schema["const"]) {
    problems.push_back(path + ": does not match const");
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const json& option : schema["enum"]) {
      if (value == option) {
        found = true;
        break;
      }
    }
    if (!found) problems.push_back(path + ": not one of the allowed values");
  }
  if (schema.contains("required")) {
    for (const json& key : schema["required"]) {
      if (!value.contains(key.get<std::string>())) {
        problems.push_back(path + ": missing required key '" +
                           key.get<std::string>() + "'");
      }
    }
  }
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (value.contains(key)) {
        const auto subproblems = validate(value[key], sub, path + "." + key);
        problems.insert(problems.end(), subproblems.begin(), subproblems.end());
      }
    }
  }
  if (schema.contains("items") && value.is_array()) {
    std::size_t idx = 0;
    for (const json& element : value) {
      const auto subproblems =
          validate(element, schema["items"], path + "[" + std::to_string(idx) + "]");
      problems.insert(problems.end(), subproblems.begin(), subproblems.end());
      ++idx;
    }
  }
  return problems;
}

}  // namespace entlab::json_schema
