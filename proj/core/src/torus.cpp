#include "cycloknot/torus.hpp"

#include <string>

#include "cycloknot/ado.hpp"
#include "cycloknot/jones.hpp"
#include "cycloknot/knot_spec.hpp"
#include "cycloknot/qtools.hpp"
#include "cycloknot/ring_maps.hpp"
#include "cycloknot/serialize.hpp"

namespace cycloknot {

namespace {

void require_torus_args(std::int64_t t, std::int64_t p, const char* who) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument(std::string(who) + ": p must be odd and >= 3");
  if (t < 1) throw std::invalid_argument(std::string(who) + ": t must be >= 1");
}

// e_p^{[(2t+1)k^2 + (2t-1)k]/2 + shift} as zeta_{2p}^{...}; the bracket may be odd.
CycNumber gaussian_phase(std::int64_t t, std::int64_t k, std::int64_t shift, std::int64_t p) {
  return CycNumber::zeta(2 * p, (2 * t + 1) * k * k + (2 * t - 1) * k + 2 * shift);
}

CycNumber ep(std::int64_t e, std::int64_t p) { return CycNumber::zeta(2 * p, 2 * e); }

}  // namespace

CycNumber wrt_torus_direct(std::int64_t t, std::int64_t p) {
  require_torus_args(t, p, "wrt_torus_direct");
  const std::int64_t order = 2 * p;
  const CycNumber one = CycNumber::one(order);
  CycNumber total = CycNumber::zero(order);
  for (std::int64_t k = 0; k < p; ++k) {
    CycNumber inner = CycNumber::zero(order);
    for (std::int64_t n = 0; n < p; ++n) {
      inner += ep(-2 * n * (t + (2 * t + 1) * k), p) * (ep(2 * n + 1, p) - one) *
               (one - ep(2 * k - 4 * n - 1, p));
    }
    const CycNumber term = gaussian_phase(t, k, -(2 * t + 1) * k, p) * inner;
    total += k % 2 == 0 ? term : -term;
  }
  return total.divexact(Integer(2));
}

CycNumber wrt_torus_odd_sum(std::int64_t t, std::int64_t p) {
  require_torus_args(t, p, "wrt_torus_odd_sum");
  const std::int64_t order = 2 * p;
  const CycNumber one = CycNumber::one(order);
  CycNumber total = CycNumber::zero(order);
  for (std::int64_t k = 0; k < p; ++k) {
    CycNumber inner = CycNumber::zero(order);
    for (std::int64_t n = 1; n < 2 * p; n += 2) {
      inner += ep((1 - t - (2 * t + 1) * k) * n, p) * (one - ep(-n, p)) * (one - ep(2 * k + 1 - 2 * n, p));
    }
    const CycNumber term = gaussian_phase(t, k, 0, p) * inner;
    total += k % 2 == 0 ? term : -term;
  }
  return (ep(t, p) * total).divexact(Integer(2));
}

CycNumber wrt_torus_from_jones(std::int64_t t, std::int64_t p) {
  require_torus_args(t, p, "wrt_torus_from_jones");
  CycNumber total = CycNumber::zero(2 * p);
  for (std::int64_t n = 1; n < 2 * p; n += 2) {
    const CycNumber b = brace(n, p);
    total += b * b * eval_at_root(colored_jones_hyper_t2(t, n), p, 1, 2 * p);
  }
  return total;
}

CgpResult cgp_torus_direct(std::int64_t t, std::int64_t p) {
  require_torus_args(t, p, "cgp_torus_direct");
  const std::int64_t order = 2 * p;
  const Variables& u = u_vars();
  const CycNumber one = CycNumber::one(order);
  const CycPoly unit = cyc_constant(u, one);
  CycPoly total(u, CyclotomicRing{order});
  for (std::int64_t k = 0; k < p; ++k) {
    CycPoly inner(u, CyclotomicRing{order});
    for (std::int64_t n = 0; n < p; ++n) {
      const CycPoly left = cyc_monomial(u, ep(2 * n + 1, p), {2}) - unit;
      const CycPoly right = unit - cyc_monomial(u, ep(2 * k - 1 - 4 * n, p), {-4});
      inner += (left * right).scaled(ep(-2 * n * (k * (2 * t + 1) + t), p));
    }
    CycNumber phase = gaussian_phase(t, k, -(2 * t + 1) * k, p);
    if (k % 2 != 0) phase = -phase;
    total += (inner * cyc_monomial(u, phase, {-2 * (2 * t + 1) * k}));
  }
  return CgpResult{KnotSpec::torus(t), p, std::move(total), 2 * (p - 1) * t, true};
}

CycPoly cgp_torus_ado_route(std::int64_t t, std::int64_t p) {
  require_torus_args(t, p, "cgp_torus_ado_route");
  const std::int64_t order = 2 * p;
  const CycPoly a = ado_torus_multisum(t, p);
  CycPoly total(u_vars(), CyclotomicRing{order});
  for (std::int64_t n = 0; n < p; ++n) {
    const CycPoly b = brace_symbolic(1, 2 * n + 1, p);
    total += b * b * substitute(a, "x", MonomialImage{p, -(2 * n + 1), "u", -4}, order);
  }
  const CycNumber one = CycNumber::one(order);
  return total * (cyc_constant(u_vars(), one) + cyc_monomial(u_vars(), one, {-2 * p}));
}

TExtraction extract_T(const CycPoly& f, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("extract_T: p must be >= 2");
  if (f.vars().size() != 1) throw std::invalid_argument("extract_T: univariate input required");
  const Variables tv{"T"};
  TExtraction out{0, CycPoly(tv, f.ring())};
  if (f.is_zero()) return out;
  if (f.has_half_exponents()) throw MixedResidueError("extract_T: half-integer u-exponents", {});
  const std::int64_t period = 2 * p;
  auto residue = [period](std::int64_t e) { return ((e % period) + period) % period; };
  out.residue = residue(f.terms().front().exp[0] / 2);
  std::vector<std::int64_t> offending;
  std::vector<CycPoly::Term> g;
  for (const auto& term : f.terms()) {
    const std::int64_t e = term.exp[0] / 2;
    if (residue(e) != out.residue) {
      offending.push_back(e);
      continue;
    }
    g.push_back({Exponent{2 * ((e - out.residue) / period), 0}, term.coeff});
  }
  if (!offending.empty()) {
    std::string list;
    for (auto e : offending) list += (list.empty() ? "" : ", ") + std::to_string(e);
    throw MixedResidueError("extract_T: u-exponents {" + list + "} are not congruent to " +
                                std::to_string(out.residue) + " mod " + std::to_string(period),
                            std::move(offending));
  }
  out.g = CycPoly::from_terms(tv, f.ring(), std::move(g));
  return out;
}

namespace {

InvariantReport t_claim_report(const std::string& identity, const CycPoly& f, std::int64_t t,
                               std::int64_t p) {
  InvariantReport r;
  r.identity = identity;
  r.params = {{"t", t}, {"p", p}};
  const CycNumber twice_wrt = wrt_torus_direct(t, p) * Integer(2);
  r.rhs = {{"residue", 0}, {"g_at_1", to_json(twice_wrt)}};
  try {
    const TExtraction x = extract_T(f, p);
    CycNumber at_one = CycNumber::zero(2 * p);
    for (const auto& term : x.g.terms()) at_one += term.coeff;
    r.lhs = {{"residue", x.residue}, {"g", to_json(x.g)}, {"g_at_1", to_json(at_one)}};
    r.pass = x.residue == 0 && at_one == twice_wrt;
    if (x.residue != 0) r.note = "u-exponents share residue " + std::to_string(x.residue) + " mod " + std::to_string(2 * p);
  } catch (const MixedResidueError& e) {
    r.lhs = {{"mixed_exponents", e.exponents()}};
    r.pass = false;
    r.note = e.what();
  }
  return r;
}

}  // namespace

InvariantReport verify_T_claim(std::int64_t t, std::int64_t p) {
  return t_claim_report("torus-T", cgp_torus_direct(t, p).numerator, t, p);
}

InvariantReport verify_T_claim_normalized(std::int64_t t, std::int64_t p) {
  const CgpResult c = cgp_torus_direct(t, p);
  const CycPoly f = c.numerator.shifted(Exponent{2 * c.u_prefactor, 0});
  return t_claim_report("torus-T-normalized", f, t, p);
}

}  // namespace cycloknot
