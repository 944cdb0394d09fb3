#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace cycloknot {

/// Outcome of checking one identity at one parameter point.
struct InvariantReport {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  nlohmann::json lhs;
  nlohmann::json rhs;
  /// Exploratory checks are reported but never counted as failures.
  bool exploratory = false;
  std::string note;

  nlohmann::json to_json() const;
  /// One line: "[PASS] identity {params}".
  std::string summary() const;
};

}  // namespace cycloknot
