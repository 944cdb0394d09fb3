#pragma once

// q-combinatorics at generic q and at roots of unity: q-integers,
// q-factorials, q-binomials, Pochhammer products, the sigma products of the
// cyclotomic expansion, braces {y} = zeta_{2p}^y - zeta_{2p}^{-y}, and the
// bracket polynomials built from them.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cycloknot/cyc_number.hpp"
#include "cycloknot/laurent_poly.hpp"

namespace cycloknot {

/// {"q"}
const Variables& q_vars();
/// {"x", "q"}
const Variables& xq_vars();
/// {"x"}
const Variables& x_vars();
/// {"u"}
const Variables& u_vars();

IntPoly qint(std::int64_t n);
IntPoly qfactorial(std::int64_t n);

/// [n; k]_q by the Pascal recursion [n;k] = [n-1;k-1] + q^k [n-1;k].
/// Zero outside 0 <= k <= n.  Rows are cached (thread-safe).
const IntPoly& qbinomial(std::int64_t n, std::int64_t k);

/// (q^a; q)_n = prod_{i<n} (1 - q^{a+i}).
IntPoly qpochhammer(std::int64_t a, std::int64_t n);

/// (xq;q)_n (x^{-1}q;q)_n in the variables (x, q).
IntPoly pochhammer_pair(std::int64_t n);

/// sigma_m(x, q) = prod_{i=1}^m (x + x^{-1} - q^i - q^{-i}) in (x, q).
IntPoly sigma(std::int64_t m);
/// sigma_m(x, zeta_p) in x over Z[zeta_p].  Cached.
CycPoly sigma_at_root(std::int64_t m, std::int64_t p);

/// [n; k] at q = zeta_m^r, via the q-Lucas factorization
/// [n0 + a m; k0 + b m] = [n0; k0] * C(a, b) when zeta_m^r is primitive.
CycNumber qbinomial_at_root(std::int64_t n, std::int64_t k, std::int64_t m, std::int64_t r = 1);
/// Same value by evaluating the generic polynomial.
CycNumber qbinomial_at_root_direct(std::int64_t n, std::int64_t k, std::int64_t m,
                                   std::int64_t r = 1);

/// Symmetric quantum binomial with quantum integers {n}/{1}, at v = zeta_{2p}:
/// v^{-k(n-k)} [n; k]_{q = v^2}.  Lives in Z[zeta_{2p}].
CycNumber symmetric_qbinomial_at_root(std::int64_t n, std::int64_t k, std::int64_t p);

/// {j} = zeta_{2p}^j - zeta_{2p}^{-j}.
CycNumber brace(std::int64_t j, std::int64_t p);
/// {c lambda + j} = u^c zeta_{2p}^j - u^{-c} zeta_{2p}^{-j} with u = e_{2p}^lambda.
CycPoly brace_symbolic(std::int64_t c, std::int64_t j, std::int64_t p);

/// B_m = prod_{j=1}^m {z+j} {z}^2 prod_{j=1}^m {z-j} in v = e_{2p}^z.
/// Throws std::logic_error unless it is monic of degree m+1 in w = v^2 + v^{-2}.
CycPoly bracket_poly(std::int64_t m, std::int64_t p);

/// Coefficients (c_0, ..., c_d) with f = sum c_k w^k, w = v^2 + v^{-2}.
/// Throws std::domain_error when f is not a polynomial in w.
std::vector<CycNumber> w_basis(const CycPoly& f);

enum class ChainOrder { Lexicographic, ReverseLexicographic };

/// Visits every chain lower <= c_1 <= c_2 <= ... <= c_length = top.  The span
/// holds c_1..c_length in that order.
void for_each_chain(std::int64_t top, std::int64_t length, std::int64_t lower,
                    const std::function<void(std::span<const std::int64_t>)>& visit,
                    ChainOrder order = ChainOrder::Lexicographic);

/// sum over top = k_t >= ... >= k_1 >= 0 of
///   prod_{i=1}^{t-1} zeta_p^{k_i(k_i+1)} x^{2 k_i} [k_{i+1}; k_i]_{zeta_p}
CycPoly andrews_chain_sum(std::int64_t top, std::int64_t t, std::int64_t p);

}  // namespace cycloknot
