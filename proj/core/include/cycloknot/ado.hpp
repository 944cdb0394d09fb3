#pragma once

// ADO invariants at a p-th root of unity.
//   double twist:  sum_{n<p} a_n(e_p) sigma_n(x, e_p)
//   T(2, 2t+1):    the root-of-unity multi-sum
//   T(s, t):       the conjectural chi-form in half-integer powers of x
// plus the truncated sigma-sums and Alexander-inverse series that relate
// them to the generic Habiro coefficients.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "cycloknot/knot_spec.hpp"
#include "cycloknot/laurent_poly.hpp"

namespace cycloknot {

/// The chi-form prefactor division was inexact for these parameters.
class ConjectureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AdoPoly {
  std::optional<KnotSpec> knot;  // empty for the conjectural (s, t) form
  std::int64_t p = 1;
  CycPoly poly;  // in x; coefficients in Z[zeta_p], or Z[zeta_{4stp}] for the chi-form
};

/// Mirrors take the inner ADO through zeta_p -> zeta_p^{-1}.
AdoPoly ado(const KnotSpec& k, std::int64_t p);

/// ADO of T(2, 2t+1) by the root-of-unity multi-sum.
CycPoly ado_torus_multisum(std::int64_t t, std::int64_t p);

/// sum_{n < terms} a_n(K; e_p) sigma_n(x, e_p), from the coefficients of K itself.
CycPoly sigma_sum(const KnotSpec& k, std::int64_t p, std::int64_t terms);

/// sum_{k < terms} a_k(K; 1) (x^p + x^{-p} - 2)^k over Z[zeta_p].
CycPoly alexander_inverse_truncation(const KnotSpec& k, std::int64_t p, std::int64_t terms);

/// Delta_K expressed in z = x + x^{-1} - 2, times sum_{k<=kmax} a_{kp}(e_p) z^k,
/// minus 1, reduced modulo z^{kmax+1}.  Zero when the series inverts Delta_K
/// to that order.  p = 1 uses the values a_k(K; 1).
CycPoly alexander_inverse_residual(const KnotSpec& k, std::int64_t p, std::int64_t kmax);

/// Coefficients (c_0..c_d) of a symmetric f(x) = sum c_k (x + x^{-1} - 2)^k.
/// Throws std::domain_error when f is not symmetric.
CycPoly to_z_basis(const CycPoly& f);

/// chi_{s,t}(l): +1 for l = st +- (s+t), -1 for l = st +- (s-t) (mod 2st), else 0.
int chi(std::int64_t s, std::int64_t t, std::int64_t l);

/// The conjectural closed form for T(s, t) in Z[zeta_{4stp}] with half-integer
/// powers of x.  Throws ConjectureViolation if the prefactor division is inexact.
AdoPoly ado_conjectural(std::int64_t s, std::int64_t t, std::int64_t p);

}  // namespace cycloknot
