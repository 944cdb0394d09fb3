#pragma once

// WRT and CGP invariants of the 0-surgery S^3(K) at an odd p.
//
// CGP is kept symbolic in u = e_{2p}^lambda: CGP = u^e N(u) / D(u) with
// D(u) = (u^p - u^{-p})^2, times (1 + u^{-2p})^{-1} when flagged.  N(u) is
// the numerator below; only its normalization tags differ between routes.

#include <cstdint>
#include <optional>

#include "cycloknot/knot_spec.hpp"
#include "cycloknot/laurent_poly.hpp"
#include "cycloknot/report.hpp"

namespace cycloknot {

/// sum over odd 0 < n < 2p of {n}^2 ADO_K(zeta_p^{-n}, e_p).  Any supported K.
CycNumber wrt_zero(const KnotSpec& k, std::int64_t p);
/// sum_{m<p} a_m(e_p) sum_{n<p} {2n+1}^2 sigma_m(zeta_p^{2n+1}, e_p).  Double twist K.
CycNumber wrt_zero_sigma_route(const KnotSpec& k, std::int64_t p);
/// -2p sum_{m <= (p-3)/2} (-1)^m a_m(e_p) [2m+1; m]_{e_p} e_p^{-m(m+1)/2}.  Double twist K.
CycNumber wrt_zero_closed(const KnotSpec& k, std::int64_t p);

/// sum_{n<p} {2n+1}^2 sigma_m(zeta_p^{2n+1}, e_p) in Z[zeta_{2p}].
CycNumber wrt_inner_sum(std::int64_t m, std::int64_t p);

struct NormalizedWrt {
  CycNumber value;       // WRT / {1}^2 when exact, else the unnormalized value
  CycNumber brace1_sq;   // {1}^2
  bool exact = false;
};
/// Divides by {1}^2 in Z[zeta_{2p}] when it divides.
NormalizedWrt normalize_wrt(const CycNumber& wrt, std::int64_t p);

struct CgpResult {
  KnotSpec knot;
  std::int64_t p = 3;
  CycPoly numerator;                 // in u over Z[zeta_{2p}]
  std::int64_t u_prefactor = 0;      // e in u^e
  bool one_plus_u_minus_2p = false;  // extra (1 + u^{-2p}) in the denominator
};

/// sum_{n=0}^{p-1} zeta_p^{(2n+1)a} u^{2a} over Z[zeta_{2p}].
CycPoly sum_ep(std::int64_t a, std::int64_t p);

/// {p(lambda + 2n)} = u^p - u^{-p} for every n < p.
bool modified_dimension_reduces(std::int64_t p);

/// N(u) = sum_m a_m(e_p) sum_n {lambda+2n+1}^2 sigma_m(zeta_p^{2n+1} u^2, e_p).
CgpResult cgp_zero(const KnotSpec& k, std::int64_t p);
/// N(u) = sum_n {lambda+2n+1}^2 ADO_K(zeta_p^{2n+1} u^2, e_p).
CgpResult cgp_from_ado(const KnotSpec& k, std::int64_t p);

/// N(u) = WRT + p a_{p-1}(e_p) (u^{2p} + u^{-2p} - 2).  With exploratory set,
/// torus knots are accepted and the report is marked exploratory.
InvariantReport verify_thm3(const KnotSpec& k, std::int64_t p, bool exploratory = false);

}  // namespace cycloknot
