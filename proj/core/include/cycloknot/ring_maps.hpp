#pragma once

// Maps between the exact rings: cyclotomic polynomials, evaluation of
// q-polynomials at roots of unity, coefficient embeddings and Galois actions,
// and monomial substitutions.

#include <cstdint>
#include <optional>
#include <string>

#include "cycloknot/cyc_number.hpp"
#include "cycloknot/laurent_poly.hpp"

namespace cycloknot {

/// Phi_m as a polynomial in t.  m = 0 is rejected.
IntPoly cyclotomic_polynomial(std::int64_t m);

/// f(q = zeta_m^k) for a single-variable f.  The result lives in Z[zeta_target]
/// (target defaults to m; it must be a multiple of m).  Half-integer exponents
/// map q^{1/2} -> zeta_{2m}^k and therefore need target divisible by 2m.
CycNumber eval_at_root(const IntPoly& f, std::int64_t m, std::int64_t k,
                       std::optional<std::int64_t> target = std::nullopt);
CycNumber eval_at_root(const CycPoly& f, std::int64_t m, std::int64_t k,
                       std::optional<std::int64_t> target = std::nullopt);

/// Integer value f(1) of a single-variable f (half-integer exponents allowed).
Integer eval_at_one(const IntPoly& f);

CycPoly embed_coeffs(const CycPoly& f, std::int64_t m);
CycPoly galois_coeffs(const CycPoly& f, std::int64_t j);
/// Coefficients that all lie in Z, or nullopt.
std::optional<IntPoly> to_int_poly(const CycPoly& f);

/// Image of a variable under substitution: var^a -> zeta_{root_order}^{root_power*a} * target^{j*a}
/// where j = target_doubled / 2.  An empty target makes the image a constant.
struct MonomialImage {
  std::int64_t root_order = 1;
  std::int64_t root_power = 0;
  std::string target;
  std::int64_t target_doubled = 0;
};

/// Substitutes `var`, collecting terms.  Result coefficients live in
/// Z[zeta_order]; every required root power must be integral there.  The
/// target variable replaces `var` in place, or merges into an existing slot.
CycPoly substitute(const CycPoly& f, const std::string& var, const MonomialImage& image,
                   std::int64_t order);
CycPoly substitute(const IntPoly& f, const std::string& var, const MonomialImage& image,
                   std::int64_t order);

/// Pure exponent substitution var^a -> target^{j*a}, j = target_doubled / 2.
template <class C>
LaurentPoly<C> substitute_variable(const LaurentPoly<C>& f, const std::string& var,
                                   const std::string& target, std::int64_t target_doubled);

/// q -> q^{-1} (or any single variable inversion).
template <class C>
LaurentPoly<C> invert_variable(const LaurentPoly<C>& f, const std::string& var) {
  return substitute_variable(f, var, var, -2);
}

}  // namespace cycloknot
