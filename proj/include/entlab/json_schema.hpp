#ifndef ENTLAB_JSON_SCHEMA_HPP
#define ENTLAB_JSON_SCHEMA_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace entlab::json_schema {

// Structural validator for the subset of JSON Schema the shipped schemas
// use: "type", "properties", "required", "items", "enum", "const".
// Returns a list of human-readable problems; empty means valid.
std::vector<std::string> validate(const nlohmann::json& value,
                                  const nlohmann::json& schema,
                                  const std::string& path = "$");

}  // namespace entlab::json_schema

#endif
