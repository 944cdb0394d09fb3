#include "cycloknot/serialize.hpp"

#include <ostream>
#include <stdexcept>

namespace cycloknot {

using nlohmann::json;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("malformed JSON: " + what);
}

template <class C, class CoeffToJson>
json poly_to_json(const LaurentPoly<C>& p, CoeffToJson coeff) {
  json vars = json::array();
  for (const auto& v : p.vars().names()) vars.push_back(v);
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json e = json::array();
    for (std::size_t i = 0; i < p.vars().size(); ++i) e.push_back(t.exp[i]);
    terms.push_back(json::array({e, coeff(t.coeff)}));
  }
  return json{{"vars", vars}, {"den", 2}, {"terms", terms}};
}

template <class C, class CoeffFromJson>
LaurentPoly<C> poly_from_json(const json& j, typename LaurentPoly<C>::Ring ring,
                              CoeffFromJson coeff) {
  require(j.is_object() && j.contains("vars") && j.contains("terms") && j.contains("den"),
          "polynomial needs vars, den, terms");
  require(j.at("den") == 2, "den must be 2");
  std::vector<std::string> names;
  for (const auto& v : j.at("vars")) {
    require(v.is_string(), "variable names are strings");
    names.push_back(v.get<std::string>());
  }
  Variables vars(std::move(names));
  std::vector<typename LaurentPoly<C>::Term> terms;
  for (const auto& t : j.at("terms")) {
    require(t.is_array() && t.size() == 2 && t[0].is_array(), "term is [[exponents], coef]");
    require(t[0].size() == vars.size(), "exponent arity matches vars");
    Exponent e{0, 0};
    for (std::size_t i = 0; i < vars.size(); ++i) {
      require(t[0][i].is_number_integer(), "exponents are integers");
      e[i] = t[0][i].get<std::int64_t>();
    }
    terms.push_back({e, coeff(t[1])});
  }
  return LaurentPoly<C>::from_terms(vars, ring, std::move(terms));
}

std::string exponent_text(std::int64_t doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return "(" + std::to_string(doubled) + "/2)";
}

std::string monomial_text(const Variables& vars, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] != 2) s += "^" + exponent_text(e[i]);
  }
  return s;
}

// Joins signed pieces ("-q^2", "3*q") as "a - b + c".
void append_signed(std::string& out, const std::string& piece) {
  if (out.empty()) {
    out = piece;
  } else if (!piece.empty() && piece[0] == '-') {
    out += " - " + piece.substr(1);
  } else {
    out += " + " + piece;
  }
}

std::string scaled_monomial(const std::string& coeff, const std::string& mono) {
  if (mono.empty()) return coeff;
  if (coeff == "1") return mono;
  if (coeff == "-1") return "-" + mono;
  return coeff + "*" + mono;
}

template <class C, class CoeffText>
std::string poly_text(const LaurentPoly<C>& p, CoeffText coeff) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    append_signed(out, scaled_monomial(coeff(it->coeff), monomial_text(p.vars(), it->exp)));
  }
  return out;
}

}  // namespace

json to_json(const Integer& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  require(j.is_string(), "integer is a number or decimal string");
  return Integer::from_string(j.get<std::string>());
}

json to_json(const CycNumber& v) {
  json c = json::array();
  for (const auto& x : v.coeffs()) c.push_back(to_json(x));
  return json{{"order", v.order()}, {"coeffs", c}};
}

CycNumber cyc_number_from_json(const json& j) {
  require(j.is_object() && j.contains("order") && j.contains("coeffs"),
          "cyclotomic number needs order, coeffs");
  const auto order = j.at("order").get<std::int64_t>();
  std::vector<Integer> c;
  for (const auto& x : j.at("coeffs")) c.push_back(integer_from_json(x));
  require(static_cast<std::int64_t>(c.size()) == totient(order), "coeffs has length phi(order)");
  return CycNumber::from_coeffs(order, std::move(c));
}

json to_json(const IntPoly& p) {
  return poly_to_json(p, [](const Integer& c) { return to_json(c); });
}

json to_json(const CycPoly& p) {
  json j = poly_to_json(p, [](const CycNumber& c) { return to_json(c); });
  j["order"] = p.ring().order;
  return j;
}

IntPoly int_poly_from_json(const json& j) {
  return poly_from_json<Integer>(j, IntegerRing{}, [](const json& c) { return integer_from_json(c); });
}

CycPoly cyc_poly_from_json(const json& j) {
  require(j.is_object() && j.contains("order"), "cyclotomic polynomial needs order");
  const auto order = j.at("order").get<std::int64_t>();
  return poly_from_json<CycNumber>(j, CyclotomicRing{order}, [order](const json& c) {
    CycNumber v = cyc_number_from_json(c);
    require(v.order() == order, "coefficient order matches polynomial order");
    return v;
  });
}

std::string to_text(const Integer& v) { return v.to_string(); }

std::string to_text(const CycNumber& v) {
  std::string out;
  const auto c = v.coeffs();
  const std::string zeta = "z" + std::to_string(v.order());
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const std::string mono = k == 0 ? "" : zeta + "^" + std::to_string(k);
    append_signed(out, scaled_monomial(c[k].to_string(), mono));
  }
  return out.empty() ? "0" : out;
}

std::string to_text(const IntPoly& p) {
  return poly_text(p, [](const Integer& c) { return c.to_string(); });
}

std::string to_text(const CycPoly& p) {
  return poly_text(p, [](const CycNumber& c) {
    if (auto i = c.as_integer()) return i->to_string();
    const std::string s = to_text(c);
    if (s.find(' ') == std::string::npos) return s;
    return "(" + s + ")";
  });
}

std::ostream& operator<<(std::ostream& os, const CycNumber& v) { return os << to_text(v); }

}  // namespace cycloknot
