#pragma once

// JSON and text forms of the exact types.
//
// JSON:
//   Integer    number when it fits in 64 bits, decimal string otherwise
//   CycNumber  {"order": m, "coeffs": [c_0, ..., c_{phi(m)-1}]}
//   IntPoly    {"vars": [...], "den": 2, "terms": [[[e_1, e_2], coef], ...]}
//   CycPoly    same, with an extra "order" key so the zero polynomial keeps its ring
// Exponent entries are doubled (den = 2); terms are sorted lexicographically.
//
// Text: descending exponent order, zeta_m^k written z{m}^k.

#include <string>

#include <nlohmann/json.hpp>

#include "cycloknot/cyc_number.hpp"
#include "cycloknot/integer.hpp"
#include "cycloknot/laurent_poly.hpp"

namespace cycloknot {

nlohmann::json to_json(const Integer& v);
nlohmann::json to_json(const CycNumber& v);
nlohmann::json to_json(const IntPoly& p);
nlohmann::json to_json(const CycPoly& p);

Integer integer_from_json(const nlohmann::json& j);
CycNumber cyc_number_from_json(const nlohmann::json& j);
IntPoly int_poly_from_json(const nlohmann::json& j);
CycPoly cyc_poly_from_json(const nlohmann::json& j);

std::string to_text(const Integer& v);
std::string to_text(const CycNumber& v);
std::string to_text(const IntPoly& p);
std::string to_text(const CycPoly& p);

}  // namespace cycloknot
