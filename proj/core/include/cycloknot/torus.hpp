#pragma once

// WRT and CGP of the 0-surgery on T(2, 2t+1) from the explicit double sums,
// and the extraction of the T = u^{2p} polynomial from the CGP numerator.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cycloknot/laurent_poly.hpp"
#include "cycloknot/report.hpp"
#include "cycloknot/wrt_cgp.hpp"

namespace cycloknot {

/// (1/2) sum_k (-1)^k e_p^{[(2t+1)k^2 + (2t-1)k]/2 - (2t+1)k}
///   sum_{n<p} e_p^{-2n(t+(2t+1)k)} (e_p^{2n+1} - 1)(1 - e_p^{2k-4n-1}).
CycNumber wrt_torus_direct(std::int64_t t, std::int64_t p);
/// The same value from the sum over odd 0 < n < 2p with prefactor e_p^t / 2.
CycNumber wrt_torus_odd_sum(std::int64_t t, std::int64_t p);
/// sum over odd 0 < n < 2p of {n}^2 J_K(q^n, q)|_{q = e_p}, J from the hypergeometric sum.
CycNumber wrt_torus_from_jones(std::int64_t t, std::int64_t p);

/// DoubleSum(u) as numerator, tagged with u^{2(p-1)t} and (1 + u^{-2p}).
CgpResult cgp_torus_direct(std::int64_t t, std::int64_t p);
/// (1 + u^{-2p}) sum_n {lambda+2n+1}^2 ADO_{T(2,2t+1)}(zeta_p^{-(2n+1)} u^{-2}, e_p).
CycPoly cgp_torus_ado_route(std::int64_t t, std::int64_t p);

class MixedResidueError : public std::runtime_error {
 public:
  MixedResidueError(const std::string& what, std::vector<std::int64_t> exponents)
      : std::runtime_error(what), exponents_(std::move(exponents)) {}
  /// u-exponents that disagree with the residue of the lowest term.
  const std::vector<std::int64_t>& exponents() const { return exponents_; }

 private:
  std::vector<std::int64_t> exponents_;
};

struct TExtraction {
  std::int64_t residue = 0;  // in [0, 2p)
  CycPoly g;                 // in T with u^{-residue} f = g(u^{2p})
};

/// Requires every u-exponent of f to share one residue modulo 2p.
TExtraction extract_T(const CycPoly& f, std::int64_t p);

/// DoubleSum is a T-polynomial with residue 0 and g(1) = 2 * wrt_torus_direct.
InvariantReport verify_T_claim(std::int64_t t, std::int64_t p);
/// The same check on u^{2(p-1)t} DoubleSum(u), the numerator including its u-prefactor.
InvariantReport verify_T_claim_normalized(std::int64_t t, std::int64_t p);

}  // namespace cycloknot
