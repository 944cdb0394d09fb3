#pragma once

// Sparse exact Laurent polynomials in up to two named variables.
//
// Exponents are stored doubled, so x^{1/2} is the exponent entry 1 and x^{-3}
// is -6.  Terms are kept sorted lexicographically by exponent vector with no
// zero coefficients; the empty term list is the canonical zero.

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cycloknot/cyc_number.hpp"
#include "cycloknot/integer.hpp"

namespace cycloknot {

/// Ordered list of at most two distinct variable names.
class Variables {
 public:
  Variables() = default;
  Variables(std::initializer_list<std::string> names) : Variables(std::vector<std::string>(names)) {}
  explicit Variables(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  /// Index of `name`, or throws std::invalid_argument.
  std::size_t require(const std::string& name) const;

  friend bool operator==(const Variables&, const Variables&) = default;

 private:
  std::vector<std::string> names_;
};

/// Doubled exponent vector; slots beyond the variable count stay zero.
using Exponent = std::array<std::int64_t, 2>;

struct IntegerRing {
  Integer zero() const { return Integer(0); }
  Integer from_integer(const Integer& v) const { return v; }
  bool owns(const Integer&) const { return true; }
  friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

struct CyclotomicRing {
  std::int64_t order = 1;
  CycNumber zero() const { return CycNumber::zero(order); }
  CycNumber from_integer(const Integer& v) const { return CycNumber::from_integer(order, v); }
  bool owns(const CycNumber& c) const { return c.order() == order; }
  friend bool operator==(const CyclotomicRing&, const CyclotomicRing&) = default;
};

template <class C>
struct ring_of;
template <>
struct ring_of<Integer> {
  using type = IntegerRing;
};
template <>
struct ring_of<CycNumber> {
  using type = CyclotomicRing;
};

inline std::optional<Integer> exact_quotient(const Integer& a, const Integer& b) {
  if (b.is_zero() || !a.divisible_by(b)) return std::nullopt;
  return a.divexact(b);
}

inline std::optional<CycNumber> exact_quotient(const CycNumber& a, const CycNumber& b) {
  if (auto s = b.as_integer(); s && (s->is_one() || *s == Integer(-1))) return a * *s;
  return a.divide(b);
}

template <class C>
class LaurentPoly {
 public:
  using Ring = typename ring_of<C>::type;
  struct Term {
    Exponent exp{};
    C coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(Variables vars, Ring ring = {}) : vars_(std::move(vars)), ring_(ring) {}

  /// Canonicalizes: sorts, merges equal exponents, drops zeros.
  static LaurentPoly from_terms(Variables vars, Ring ring, std::vector<Term> terms) {
    LaurentPoly p(std::move(vars), ring);
    for (const auto& t : terms) p.check_term(t);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  static LaurentPoly constant(Variables vars, Ring ring, C c) {
    return monomial(std::move(vars), ring, std::move(c), Exponent{0, 0});
  }

  static LaurentPoly monomial(Variables vars, Ring ring, C c, Exponent doubled) {
    std::vector<Term> t;
    t.push_back(Term{doubled, std::move(c)});
    return from_terms(std::move(vars), ring, std::move(t));
  }

  const Variables& vars() const { return vars_; }
  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const Exponent& doubled) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), doubled,
                               [](const Term& t, const Exponent& e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == doubled) return it->coeff;
    return ring_.zero();
  }

  bool has_half_exponents() const {
    for (const auto& t : terms_) {
      for (auto e : t.exp) {
        if (e % 2 != 0) return true;
      }
    }
    return false;
  }

  /// Smallest / largest doubled exponent of variable `i`; zero polynomial throws.
  std::int64_t min_exponent(std::size_t i) const { return extreme_exponent(i, false); }
  std::int64_t max_exponent(std::size_t i) const { return extreme_exponent(i, true); }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    return merge(a, b, false);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return merge(a, b, true);
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return multiply(a, b);
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const C& s) { return a.scaled(s); }
  friend LaurentPoly operator*(const C& s, const LaurentPoly& a) { return a.scaled(s); }

  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  LaurentPoly scaled(const C& s) const {
    LaurentPoly r(vars_, ring_);
    if (!ring_.owns(s)) throw std::invalid_argument("LaurentPoly: scalar from a different ring");
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      C c = t.coeff * s;
      if (!is_zero_coeff(c)) r.terms_.push_back(Term{t.exp, std::move(c)});
    }
    return r;
  }

  /// Multiplication by the monomial with the given doubled exponent.
  LaurentPoly shifted(const Exponent& doubled) const {
    LaurentPoly r = *this;
    for (std::size_t i = vars_.size(); i < 2; ++i) {
      if (doubled[i] != 0) throw std::invalid_argument("LaurentPoly::shifted: unused variable slot");
    }
    for (auto& t : r.terms_) {
      t.exp[0] += doubled[0];
      t.exp[1] += doubled[1];
    }
    return r;
  }

  LaurentPoly pow(unsigned e) const {
    LaurentPoly result = constant(vars_, ring_, ring_.from_integer(Integer(1)));
    LaurentPoly base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e) base = base * base;
    }
    return result;
  }

  /// Re-expresses this polynomial over a variable list containing all of vars().
  LaurentPoly with_variables(const Variables& target) const {
    std::array<std::size_t, 2> slot{};
    for (std::size_t i = 0; i < vars_.size(); ++i) slot[i] = target.require(vars_[i]);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Exponent e{0, 0};
      for (std::size_t i = 0; i < vars_.size(); ++i) e[slot[i]] = t.exp[i];
      out.push_back(Term{e, t.coeff});
    }
    return from_terms(target, ring_, std::move(out));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  static bool is_zero_coeff(const C& c) { return c.is_zero(); }

  void check_term(const Term& t) const {
    if (!ring_.owns(t.coeff)) {
      throw std::invalid_argument("LaurentPoly: coefficient from a different ring");
    }
    for (std::size_t i = vars_.size(); i < 2; ++i) {
      if (t.exp[i] != 0) throw std::invalid_argument("LaurentPoly: exponent in unused slot");
    }
  }

  void canonicalize() {
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term& x, const Term& y) { return x.exp < y.exp; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exp == t.exp) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && is_zero_coeff(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && is_zero_coeff(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  std::int64_t extreme_exponent(std::size_t i, bool want_max) const {
    if (terms_.empty()) throw std::domain_error("LaurentPoly: exponent bound of the zero polynomial");
    if (i >= vars_.size()) throw std::out_of_range("LaurentPoly: variable index out of range");
    std::int64_t best = terms_.front().exp[i];
    for (const auto& t : terms_) best = want_max ? std::max(best, t.exp[i]) : std::min(best, t.exp[i]);
    return best;
  }

  static void require_compatible(const LaurentPoly& a, const LaurentPoly& b) {
    if (!(a.vars_ == b.vars_)) throw std::invalid_argument("LaurentPoly: variable lists differ");
    if (!(a.ring_ == b.ring_)) throw std::invalid_argument("LaurentPoly: coefficient rings differ");
  }

  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    require_compatible(a, b);
    LaurentPoly r(a.vars_, a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->exp < i->exp) {
        r.terms_.push_back(Term{j->exp, subtract ? -j->coeff : j->coeff});
        ++j;
      } else {
        C c = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
        if (!is_zero_coeff(c)) r.terms_.push_back(Term{i->exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static void accumulate(C& acc, const C& x, const C& y) {
    if constexpr (std::is_same_v<C, Integer>) {
      acc.add_product(x, y);
    } else {
      acc += x * y;
    }
  }

  static LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
    require_compatible(a, b);
    LaurentPoly r(a.vars_, a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    const std::size_t nv = a.vars_.size();
    std::array<std::int64_t, 2> lo{0, 0}, hi{0, 0};
    for (std::size_t v = 0; v < nv; ++v) {
      lo[v] = a.min_exponent(v) + b.min_exponent(v);
      hi[v] = a.max_exponent(v) + b.max_exponent(v);
    }
    const std::int64_t span0 = hi[0] - lo[0] + 1, span1 = hi[1] - lo[1] + 1;
    const double cells = static_cast<double>(span0) * static_cast<double>(span1);
    const double products = static_cast<double>(a.size()) * static_cast<double>(b.size());
    if (cells <= 8.0 * products + 64.0 && cells <= double(1 << 24)) {
      // Dense accumulation; index order coincides with lexicographic order.
      std::vector<C> dense(static_cast<std::size_t>(cells), a.ring_.zero());
      for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
          const std::int64_t idx =
              (x.exp[0] + y.exp[0] - lo[0]) * span1 + (x.exp[1] + y.exp[1] - lo[1]);
          accumulate(dense[static_cast<std::size_t>(idx)], x.coeff, y.coeff);
        }
      }
      for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(dense.size()); ++idx) {
        auto& c = dense[static_cast<std::size_t>(idx)];
        if (is_zero_coeff(c)) continue;
        r.terms_.push_back(Term{Exponent{lo[0] + idx / span1, lo[1] + idx % span1}, std::move(c)});
      }
      return r;
    }
    std::vector<Term> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        prods.push_back(Term{Exponent{x.exp[0] + y.exp[0], x.exp[1] + y.exp[1]}, x.coeff * y.coeff});
      }
    }
    r.terms_ = std::move(prods);
    r.canonicalize();
    return r;
  }

  Variables vars_;
  Ring ring_{};
  std::vector<Term> terms_;
};

using IntPoly = LaurentPoly<Integer>;
using CycPoly = LaurentPoly<CycNumber>;

/// Monomial c * v0^{e0} * v1^{e1} with ordinary (undoubled) integer exponents.
IntPoly int_monomial(const Variables& vars, std::initializer_list<std::int64_t> exps,
                     const Integer& c = Integer(1));
/// Polynomial from (undoubled exponent, coefficient) pairs in a single variable.
IntPoly int_poly(const std::string& var,
                 std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms);
IntPoly int_constant(const Variables& vars, const Integer& c);

CycPoly cyc_constant(const Variables& vars, const CycNumber& c);
CycPoly cyc_monomial(const Variables& vars, const CycNumber& c,
                     std::initializer_list<std::int64_t> exps);

/// Exact division of single-variable Laurent polynomials; nullopt when the
/// remainder is nonzero (or a coefficient quotient is not exact).
template <class C>
std::optional<LaurentPoly<C>> divide_exact(const LaurentPoly<C>& num, const LaurentPoly<C>& den) {
  using P = LaurentPoly<C>;
  using Term = typename P::Term;
  if (!(num.vars() == den.vars()) || !(num.ring() == den.ring())) {
    throw std::invalid_argument("divide_exact: incompatible operands");
  }
  if (num.vars().size() != 1) throw std::invalid_argument("divide_exact: univariate only");
  if (den.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (num.is_zero()) return P(num.vars(), num.ring());
  const auto& lead = den.terms().back();
  const std::int64_t lowest_quot = num.min_exponent(0) - den.min_exponent(0);
  std::vector<Term> quot;
  P rem = num;
  while (!rem.is_zero()) {
    const auto& top = rem.terms().back();
    const std::int64_t e = top.exp[0] - lead.exp[0];
    if (e < lowest_quot) return std::nullopt;
    auto c = exact_quotient(top.coeff, lead.coeff);
    if (!c) return std::nullopt;
    P step = den.shifted(Exponent{e, 0}).scaled(*c);
    quot.push_back(Term{Exponent{e, 0}, std::move(*c)});
    rem = rem - step;
  }
  return P::from_terms(num.vars(), num.ring(), std::move(quot));
}

/// Lifts an integer polynomial into Z[zeta_order] coefficients.
CycPoly lift(const IntPoly& f, std::int64_t order);

}  // namespace cycloknot
