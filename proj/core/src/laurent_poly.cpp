#include "cycloknot/laurent_poly.hpp"

#include <cctype>

namespace cycloknot {

Variables::Variables(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 2) throw std::invalid_argument("Variables: at most two variables");
  for (const auto& n : names_) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0]))) {
      throw std::invalid_argument("Variables: invalid variable name '" + n + "'");
    }
  }
  if (names_.size() == 2 && names_[0] == names_[1]) {
    throw std::invalid_argument("Variables: duplicate variable '" + names_[0] + "'");
  }
}

std::optional<std::size_t> Variables::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Variables::require(const std::string& name) const {
  if (auto i = index_of(name)) return *i;
  throw std::invalid_argument("Variables: no variable named '" + name + "'");
}

IntPoly int_monomial(const Variables& vars, std::initializer_list<std::int64_t> exps,
                     const Integer& c) {
  if (exps.size() != vars.size()) throw std::invalid_argument("int_monomial: arity mismatch");
  Exponent e{0, 0};
  std::size_t i = 0;
  for (auto x : exps) e[i++] = 2 * x;
  return IntPoly::monomial(vars, {}, c, e);
}

IntPoly int_poly(const std::string& var,
                 std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
  std::vector<IntPoly::Term> t;
  for (const auto& [e, c] : terms) t.push_back({Exponent{2 * e, 0}, Integer(c)});
  return IntPoly::from_terms(Variables{var}, {}, std::move(t));
}

IntPoly int_constant(const Variables& vars, const Integer& c) {
  return IntPoly::constant(vars, {}, c);
}

CycPoly cyc_constant(const Variables& vars, const CycNumber& c) {
  return CycPoly::constant(vars, CyclotomicRing{c.order()}, c);
}

CycPoly cyc_monomial(const Variables& vars, const CycNumber& c,
                     std::initializer_list<std::int64_t> exps) {
  if (exps.size() != vars.size()) throw std::invalid_argument("cyc_monomial: arity mismatch");
  Exponent e{0, 0};
  std::size_t i = 0;
  for (auto x : exps) e[i++] = 2 * x;
  return CycPoly::monomial(vars, CyclotomicRing{c.order()}, c, e);
}

CycPoly lift(const IntPoly& f, std::int64_t order) {
  std::vector<CycPoly::Term> t;
  t.reserve(f.size());
  for (const auto& term : f.terms()) {
    t.push_back({term.exp, CycNumber::from_integer(order, term.coeff)});
  }
  return CycPoly::from_terms(f.vars(), CyclotomicRing{order}, std::move(t));
}

}  // namespace cycloknot
