#include "cycloknot/ado.hpp"

#include <numeric>
#include <string>

#include "cycloknot/habiro.hpp"
#include "cycloknot/qtools.hpp"
#include "cycloknot/ring_maps.hpp"

namespace cycloknot {

namespace {

void require_p(std::int64_t p, const char* who) {
  if (p < 1) throw std::invalid_argument(std::string(who) + ": p must be >= 1");
}

CycPoly x_pow_minus_two(std::int64_t p) {
  const CycNumber one = CycNumber::one(p);
  return cyc_monomial(x_vars(), one, {p}) + cyc_monomial(x_vars(), one, {-p}) -
         cyc_constant(x_vars(), CycNumber::from_integer(p, Integer(2)));
}

}  // namespace

CycPoly ado_torus_multisum(std::int64_t t, std::int64_t p) {
  require_p(p, "ado_torus_multisum");
  if (t < 1) throw std::invalid_argument("ado_torus_multisum: t must be >= 1");
  const Variables& x = x_vars();
  const CycNumber one = CycNumber::one(p);
  CycPoly total(x, CyclotomicRing{p});
  CycPoly head = cyc_constant(x, one);  // (x zeta; zeta)_top
  for (std::int64_t top = 0; top < p; ++top) {
    if (top > 0) head *= cyc_constant(x, one) - cyc_monomial(x, CycNumber::zeta(p, top), {1});
    for_each_chain(top, t, 0, [&](std::span<const std::int64_t> k) {
      CycNumber c = one;
      std::int64_t e = top;
      for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        c *= CycNumber::zeta(p, k[i] * (k[i] + 1)) * qbinomial_at_root(k[i + 1], k[i], p);
        e += 2 * k[i];
      }
      if (!c.is_zero()) total += head.shifted(Exponent{2 * e, 0}).scaled(c);
    });
  }
  return total.shifted(Exponent{2 * t * (1 - p), 0}).scaled(CycNumber::zeta(p, t));
}

CycPoly sigma_sum(const KnotSpec& k, std::int64_t p, std::int64_t terms) {
  require_p(p, "sigma_sum");
  CycPoly total(x_vars(), CyclotomicRing{p});
  for (std::int64_t n = 0; n < terms; ++n) {
    const CycNumber a = a_at_root(k, n, p);
    if (!a.is_zero()) total += sigma_at_root(n, p).scaled(a);
  }
  return total;
}

AdoPoly ado(const KnotSpec& k, std::int64_t p) {
  require_p(p, "ado");
  if (k.is_mirror()) {
    AdoPoly inner = ado(k.unmirrored(), p);
    return AdoPoly{k, p, galois_coeffs(inner.poly, -1)};
  }
  if (k.family() == KnotSpec::Family::DoubleTwist) return AdoPoly{k, p, sigma_sum(k, p, p)};
  return AdoPoly{k, p, ado_torus_multisum(k.t(), p)};
}

CycPoly alexander_inverse_truncation(const KnotSpec& k, std::int64_t p, std::int64_t terms) {
  require_p(p, "alexander_inverse_truncation");
  CycPoly total(x_vars(), CyclotomicRing{p});
  const CycPoly z = x_pow_minus_two(p);
  CycPoly zk = cyc_constant(x_vars(), CycNumber::one(p));
  for (std::int64_t j = 0; j < terms; ++j) {
    total += zk.scaled(CycNumber::from_integer(p, a_at_one(k, j)));
    zk *= z;
  }
  return total;
}

CycPoly to_z_basis(const CycPoly& f) {
  if (f.vars().size() != 1) throw std::domain_error("to_z_basis: univariate input required");
  const std::int64_t order = f.ring().order;
  const Variables zv{"z"};
  CycPoly out(zv, CyclotomicRing{order});
  if (f.is_zero()) return out;
  if (f.has_half_exponents()) throw std::domain_error("to_z_basis: half-integer exponents");
  const Variables& xv = f.vars();
  const CycPoly z = cyc_monomial(xv, CycNumber::one(order), {1}) +
                    cyc_monomial(xv, CycNumber::one(order), {-1}) -
                    cyc_constant(xv, CycNumber::from_integer(order, Integer(2)));
  CycPoly rest = f;
  while (!rest.is_zero()) {
    const std::int64_t d = rest.max_exponent(0) / 2;
    if (d < 0 || rest.min_exponent(0) / 2 < -d) throw std::domain_error("to_z_basis: not symmetric");
    const CycNumber c = rest.terms().back().coeff;
    out += cyc_monomial(zv, c, {d});
    rest -= z.pow(static_cast<unsigned>(d)).scaled(c);
  }
  return out;
}

CycPoly alexander_inverse_residual(const KnotSpec& k, std::int64_t p, std::int64_t kmax) {
  require_p(p, "alexander_inverse_residual");
  if (kmax < 0) throw std::invalid_argument("alexander_inverse_residual: kmax must be >= 0");
  const Variables zv{"z"};
  const CycPoly delta = to_z_basis(lift(alexander(k), p));
  CycPoly series(zv, CyclotomicRing{p});
  for (std::int64_t j = 0; j <= kmax; ++j) series += cyc_monomial(zv, a_at_root(k, j * p, p), {j});
  const CycPoly prod = delta * series - cyc_constant(zv, CycNumber::one(p));
  std::vector<CycPoly::Term> low;
  for (const auto& term : prod.terms()) {
    if (term.exp[0] <= 2 * kmax) low.push_back(term);
  }
  return CycPoly::from_terms(zv, CyclotomicRing{p}, std::move(low));
}

int chi(std::int64_t s, std::int64_t t, std::int64_t l) {
  const std::int64_t period = 2 * s * t;
  auto res = [period](std::int64_t v) { return ((v % period) + period) % period; };
  const std::int64_t r = res(l);
  if (r == res(s * t + s + t) || r == res(s * t - s - t)) return 1;
  if (r == res(s * t + s - t) || r == res(s * t - s + t)) return -1;
  return 0;
}

AdoPoly ado_conjectural(std::int64_t s, std::int64_t t, std::int64_t p) {
  require_p(p, "ado_conjectural");
  if (s < 2 || t < 2 || std::gcd(s, t) != 1) {
    throw std::invalid_argument("ado_conjectural: need coprime s, t >= 2");
  }
  const std::int64_t order = 4 * s * t * p;
  const Variables& x = x_vars();
  const CyclotomicRing ring{order};
  std::vector<CycPoly::Term> terms;
  for (std::int64_t l = 0; l <= 2 * s * t * p; ++l) {
    const int c = chi(s, t, l);
    if (c == 0) continue;
    // e_p^{(l^2 + s^2 t^2 - s^2 - t^2)/(4st)} = zeta_{4stp}^{...}; x^{l/2} is doubled exponent l.
    const CycNumber z = CycNumber::zeta(order, l * l + s * s * t * t - s * s - t * t);
    terms.push_back({Exponent{l, 0}, c > 0 ? z : -z});
  }
  const CycPoly chi_sum = CycPoly::from_terms(x, ring, std::move(terms));
  const CycNumber one = CycNumber::one(order);
  CycPoly qint_x(x, ring);  // (1 - x^p)/(1 - x)
  for (std::int64_t i = 0; i < p; ++i) qint_x += cyc_monomial(x, one, {i});
  const CycPoly den = (cyc_constant(x, one) - cyc_monomial(x, one, {s * p})) *
                      (cyc_constant(x, one) - cyc_monomial(x, one, {t * p}));
  auto quot = divide_exact(chi_sum * qint_x, den);
  if (!quot) {
    throw ConjectureViolation("ado_conjectural: numerator not divisible by (1 - x^{sp})(1 - x^{tp}) for s=" +
                              std::to_string(s) + ", t=" + std::to_string(t) + ", p=" + std::to_string(p));
  }
  return AdoPoly{std::nullopt, p, quot->shifted(Exponent{1 - (s - 1) * (t - 1) * p, 0})};
}

}  // namespace cycloknot
