#pragma once

// Floating-point re-derivations used as independent oracles.  Nothing here
// calls into the exact pipeline except the conversion helpers at the top.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <string>

#include "cycloknot/cyc_number.hpp"
#include "cycloknot/laurent_poly.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline cplx root(std::int64_t m, std::int64_t k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
}

inline cplx to_complex(const cycloknot::CycNumber& c) {
  cplx z = 0.0;
  const auto coeffs = c.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    z += coeffs[i].to_mpz().get_d() * root(c.order(), static_cast<std::int64_t>(i));
  }
  return z;
}

// Doubled exponents, so a half power uses the principal square root of the value.
template <class C>
cplx evaluate(const cycloknot::LaurentPoly<C>& f, const std::map<std::string, cplx>& at) {
  cplx total = 0.0;
  for (const auto& term : f.terms()) {
    cplx v;
    if constexpr (std::is_same_v<C, cycloknot::CycNumber>) {
      v = to_complex(term.coeff);
    } else {
      v = term.coeff.to_mpz().get_d();
    }
    for (std::size_t i = 0; i < f.vars().size(); ++i) {
      const cplx base = at.at(f.vars()[i]);
      v *= std::pow(std::sqrt(base), static_cast<double>(term.exp[i]));
    }
    total += v;
  }
  return total;
}

inline cplx qbinom(std::int64_t n, std::int64_t k, cplx q) {
  if (k < 0 || k > n) return 0.0;
  cplx num = 1.0, den = 1.0;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= 1.0 - std::pow(q, static_cast<double>(n - i));
    den *= 1.0 - std::pow(q, static_cast<double>(i + 1));
  }
  return num / den;
}

// Chain sum over n = s_len >= ... >= s_1 >= 0, built recursively from the top.
inline cplx chain(std::int64_t len, std::int64_t n, bool negative, cplx q) {
  std::function<cplx(std::int64_t, std::int64_t)> rec = [&](std::int64_t level, std::int64_t upper) -> cplx {
    if (level == 0) return 1.0;
    cplx s = 0.0;
    for (std::int64_t v = 0; v <= upper; ++v) {
      const double e = negative ? -static_cast<double>(v * (upper + 1)) : static_cast<double>(v * (v + 1));
      s += std::pow(q, e) * qbinom(upper, v, q) * rec(level - 1, v);
    }
    return s;
  };
  return rec(len - 1, n);
}

// Habiro coefficient of K(l, m) with l <= m, m > 0, at a complex q.
inline cplx double_twist_a(std::int64_t l, std::int64_t m, std::int64_t n, cplx q) {
  if (l > 0) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    return sign * std::pow(q, static_cast<double>(n * (n + 1) / 2 + n)) * chain(l, n, false, q) * chain(m, n, false, q);
  }
  return chain(m, n, false, q) * chain(-l, n, true, q);
}

inline cplx sigma(std::int64_t n, cplx x, cplx q) {
  cplx s = 1.0;
  for (std::int64_t i = 1; i <= n; ++i) s *= x + 1.0 / x - std::pow(q, static_cast<double>(i)) - std::pow(q, -static_cast<double>(i));
  return s;
}

inline cplx colored_jones(std::int64_t l, std::int64_t m, std::int64_t N, cplx q) {
  cplx s = 0.0;
  for (std::int64_t n = 0; n < N; ++n) s += double_twist_a(l, m, n, q) * sigma(n, std::pow(q, static_cast<double>(N)), q);
  return s;
}

inline cplx ado(std::int64_t l, std::int64_t m, std::int64_t p, cplx x) {
  const cplx q = root(p, 1);
  cplx s = 0.0;
  for (std::int64_t n = 0; n < p; ++n) s += double_twist_a(l, m, n, q) * sigma(n, x, q);
  return s;
}

// sum over odd 0 < n < 2p of {n}^2 ADO(zeta_p^{-n}), {n} = e_{2p}^n - e_{2p}^{-n}.
inline cplx wrt(std::int64_t l, std::int64_t m, std::int64_t p) {
  cplx s = 0.0;
  for (std::int64_t n = 1; n < 2 * p; n += 2) {
    const cplx b = root(2 * p, n) - root(2 * p, -n);
    s += b * b * ado(l, m, p, root(p, -n));
  }
  return s;
}

inline bool near(cplx a, cplx b, double tol = 1e-7) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

}  // namespace oracle
