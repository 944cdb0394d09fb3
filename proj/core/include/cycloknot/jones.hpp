#pragma once

// Colored Jones polynomials J_K(q^N, q): from the Habiro coefficients, from
// the q-hypergeometric multi-sum for T(2, 2t+1), and the division-free
// residual of the torus-knot recurrence.

#include <cstdint>

#include "cycloknot/knot_spec.hpp"
#include "cycloknot/laurent_poly.hpp"

namespace cycloknot {

/// sum_{n<N} C_n(K; q) (q^{1+N}; q)_n (q^{1-N}; q)_n.
IntPoly colored_jones(const KnotSpec& k, std::int64_t N);

/// (qx)^t sum_{k_t >= ... >= k_1 >= 0} (qx; q)_{k_t} x^{k_t}
///   prod_{i<t} q^{k_i(k_i+1)} x^{2k_i} [k_{i+1}; k_i]   at x = q^{-N}.
IntPoly colored_jones_hyper_t2(std::int64_t t, std::int64_t N);

/// (1 - q^{-N}) J_N - q^{(s-1)(t-1)(1-N)/2} (1 - q^{s(1-N)-1} - q^{t(1-N)-1} + q^{(s+t)(1-N)})
///   - (1 - q^{2-N}) q^{st(1-N)-1} J_{N-2}.
/// Zero exactly when the recurrence holds.
IntPoly torus_recurrence_residual(std::int64_t s, std::int64_t t, std::int64_t N, const IntPoly& j_n,
                                  const IntPoly& j_n_minus_2);
bool check_torus_recurrence(std::int64_t s, std::int64_t t, std::int64_t N, const IntPoly& j_n,
                            const IntPoly& j_n_minus_2);

}  // namespace cycloknot
