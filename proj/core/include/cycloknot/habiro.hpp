#pragma once

// Alexander polynomials and Habiro cyclotomic coefficients
//   J_K(x, q) = sum_m a_m(K; q) sigma_m(x, q),
//   C_m(K; q) = (-1)^m q^{-m(m+1)/2} a_m(K; q),
// for double twist knots, (2, 2t+1) torus knots and their mirrors, the
// inversion of colored Jones values back to C_n, and the closed forms for
// the coefficients of Mirror(T(2,5)) at roots of unity.

#include <cstdint>
#include <span>

#include "cycloknot/cyc_number.hpp"
#include "cycloknot/knot_spec.hpp"
#include "cycloknot/laurent_poly.hpp"
#include "cycloknot/qtools.hpp"

namespace cycloknot {

/// Delta_K(x): 1 + lm (x + x^{-1} - 2) for K(l, m); x^{-t}(1 + x^{2t+1})/(1 + x)
/// for T(2, 2t+1).  Mirrors share the polynomial of the underlying knot.
IntPoly alexander(const KnotSpec& k);

/// a_n(K; q) (cached).
const IntPoly& habiro_a(const KnotSpec& k, std::int64_t n);
/// C_n(K; q).
IntPoly habiro_c(const KnotSpec& k, std::int64_t n);
/// a_n computed afresh with the given chain enumeration order, bypassing the cache.
IntPoly habiro_a_enumerated(const KnotSpec& k, std::int64_t n, ChainOrder order);

/// C_n from the colored Jones values evals[l-1] = J_K(q^l, q), l = 1..n+1.
/// Sums over the common denominator (q;q)_{2n+2}, then divides once; throws
/// std::domain_error when that division is inexact.
IntPoly habiro_from_jones(std::span<const IntPoly> evals, std::int64_t n);

/// a_k(K; 1).
Integer a_at_one(const KnotSpec& k, std::int64_t n);
/// a_n(K; zeta_p) in Z[zeta_p].
CycNumber a_at_root(const KnotSpec& k, std::int64_t n, std::int64_t p);

/// Closed forms for K = Mirror(T(2,5)).
namespace t25 {
/// a_p(e_p) = -2 - sum_{j = floor(p/2)+1}^{p-1} e_p^{j^2-1} [j; 2j-1-p]_{e_p}.
CycNumber a_p(std::int64_t p);
/// a_{mp}(e_p) by the binomial double sum.
CycNumber a_mp(std::int64_t m, std::int64_t p);
/// a_{n-1}(1) = (-1)^{n-1} sum_{l=0}^{n} C(n+l, 2l+1).
Integer a_one_closed(std::int64_t n);
/// a_{2m}(-1) = (-1)^m (1 + sum_{l=0}^{m-1} C(m+l, 2l)).
Integer a_minus_one_closed(std::int64_t m);
}  // namespace t25

}  // namespace cycloknot
