#include "cycloknot/report.hpp"

namespace cycloknot {

nlohmann::json InvariantReport::to_json() const {
  nlohmann::json j{{"identity", identity}, {"params", params}, {"pass", pass}, {"lhs", lhs}, {"rhs", rhs}};
  if (exploratory) j["exploratory"] = true;
  if (!note.empty()) j["note"] = note;
  return j;
}

std::string InvariantReport::summary() const {
  std::string s = pass ? "[PASS] " : "[FAIL] ";
  s += identity + " " + params.dump();
  if (exploratory) s += " (exploratory)";
  return s;
}

}  // namespace cycloknot
