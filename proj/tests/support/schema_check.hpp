#pragma once

// Minimal JSON-schema checker for the keywords the shipped schemas use:
// type, enum, required, properties, items, anyOf, minimum, minItems,
// pattern and local "#/$defs/..." references.

#include <regex>
#include <string>

#include <json.hpp>

namespace schema {

using json = nlohmann::json;

inline bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

/// Returns an empty string when v conforms, else the first violation.
inline std::string check(const json& v, const json& s, const json& root, const std::string& path = "$") {
  if (s.contains("$ref")) {
    const std::string ref = s["$ref"];
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) return path + ": unsupported $ref " + ref;
    return check(v, root["$defs"][ref.substr(prefix.size())], root, path);
  }
  if (s.contains("type")) {
    bool ok = false;
    if (s["type"].is_array()) {
      for (const auto& t : s["type"]) ok = ok || type_matches(v, t);
    } else {
      ok = type_matches(v, s["type"]);
    }
    if (!ok) return path + ": expected type " + s["type"].dump() + ", got " + v.dump();
  }
  if (s.contains("enum")) {
    bool ok = false;
    for (const auto& e : s["enum"]) ok = ok || e == v;
    if (!ok) return path + ": " + v.dump() + " not in enum";
  }
  if (s.contains("anyOf")) {
    bool ok = false;
    for (const auto& alt : s["anyOf"]) ok = ok || check(v, alt, root, path).empty();
    if (!ok) return path + ": matches no alternative";
  }
  if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
    return path + ": below minimum";
  if (s.contains("pattern") && v.is_string() &&
      !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
    return path + ": " + v.dump() + " does not match " + s["pattern"].get<std::string>();
  if (v.is_object()) {
    if (s.contains("required"))
      for (const auto& k : s["required"])
        if (!v.contains(k.get<std::string>())) return path + ": missing " + k.get<std::string>();
    if (s.contains("properties"))
      for (const auto& [k, sub] : s["properties"].items())
        if (v.contains(k))
          if (auto e = check(v[k], sub, root, path + "." + k); !e.empty()) return e;
  }
  if (v.is_array()) {
    if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) return path + ": too few items";
    if (s.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i)
        if (auto e = check(v[i], s["items"], root, path + "[" + std::to_string(i) + "]"); !e.empty()) return e;
  }
  return {};
}

/// Checks v against root["$defs"][def], or against root itself when def is empty.
inline std::string check_def(const json& v, const json& root, const std::string& def = "") {
  return check(v, def.empty() ? root : root["$defs"][def], root);
}

}  // namespace schema
