#include "cycloknot/wrt_cgp.hpp"

#include <map>
#include <mutex>
#include <string>

#include "cycloknot/ado.hpp"
#include "cycloknot/habiro.hpp"
#include "cycloknot/qtools.hpp"
#include "cycloknot/ring_maps.hpp"
#include "cycloknot/serialize.hpp"

namespace cycloknot {

namespace {

void require_odd_p(std::int64_t p, const char* who) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument(std::string(who) + ": p must be odd and >= 3");
}

void require_double_twist(const KnotSpec& k, const char* who) {
  if (k.family() != KnotSpec::Family::DoubleTwist) {
    throw std::invalid_argument(std::string(who) + ": double twist knot required, got " + k.to_string());
  }
}

// x -> zeta_p^{2n+1} u^2
MonomialImage shifted_u_square(std::int64_t n, std::int64_t p) {
  return MonomialImage{p, 2 * n + 1, "u", 4};
}

template <class Value, class Make>
Value cached(std::map<std::pair<std::int64_t, std::int64_t>, Value>& cache, std::mutex& mu,
             std::int64_t m, std::int64_t p, Make make) {
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({m, p}); it != cache.end()) return it->second;
  }
  Value v = make();
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(m, p), std::move(v)).first->second;
}

// sum_n {lambda+2n+1}^2 f(zeta_p^{2n+1} u^2) for f in x over Z[zeta_p].
CycPoly weighted_u_sum(const CycPoly& f, std::int64_t p) {
  CycPoly total(u_vars(), CyclotomicRing{2 * p});
  for (std::int64_t n = 0; n < p; ++n) {
    const CycPoly b = brace_symbolic(1, 2 * n + 1, p);
    total += b * b * substitute(f, "x", shifted_u_square(n, p), 2 * p);
  }
  return total;
}

CycPoly cgp_inner_sum(std::int64_t m, std::int64_t p) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, CycPoly> cache;
  return cached(cache, mu, m, p, [&] { return weighted_u_sum(sigma_at_root(m, p), p); });
}

}  // namespace

CycNumber wrt_zero(const KnotSpec& k, std::int64_t p) {
  require_odd_p(p, "wrt_zero");
  const CycPoly a = ado(k, p).poly;
  CycNumber total = CycNumber::zero(2 * p);
  for (std::int64_t n = 1; n < 2 * p; n += 2) {
    const CycNumber b = brace(n, p);
    total += b * b * eval_at_root(a, p, -n, 2 * p);
  }
  return total;
}

CycNumber wrt_inner_sum(std::int64_t m, std::int64_t p) {
  require_odd_p(p, "wrt_inner_sum");
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, CycNumber> cache;
  return cached(cache, mu, m, p, [&] {
    const CycPoly s = sigma_at_root(m, p);
    CycNumber total = CycNumber::zero(2 * p);
    for (std::int64_t n = 0; n < p; ++n) {
      const CycNumber b = brace(2 * n + 1, p);
      total += b * b * eval_at_root(s, p, 2 * n + 1, 2 * p);
    }
    return total;
  });
}

CycNumber wrt_zero_sigma_route(const KnotSpec& k, std::int64_t p) {
  require_odd_p(p, "wrt_zero_sigma_route");
  require_double_twist(k, "wrt_zero_sigma_route");
  CycNumber total = CycNumber::zero(2 * p);
  for (std::int64_t m = 0; m < p; ++m) total += a_at_root(k, m, p).embed(2 * p) * wrt_inner_sum(m, p);
  return total;
}

CycNumber wrt_zero_closed(const KnotSpec& k, std::int64_t p) {
  require_odd_p(p, "wrt_zero_closed");
  require_double_twist(k, "wrt_zero_closed");
  CycNumber total = CycNumber::zero(p);
  for (std::int64_t m = 0; m <= (p - 3) / 2; ++m) {
    CycNumber term = a_at_root(k, m, p) * qbinomial_at_root(2 * m + 1, m, p) *
                     CycNumber::zeta(p, -m * (m + 1) / 2);
    total += m % 2 == 0 ? term : -term;
  }
  return (total * Integer(-2 * p)).embed(2 * p);
}

NormalizedWrt normalize_wrt(const CycNumber& wrt, std::int64_t p) {
  require_odd_p(p, "normalize_wrt");
  const CycNumber b = brace(1, p);
  const CycNumber b2 = b * b;
  if (auto q = wrt.divide(b2)) return NormalizedWrt{*q, b2, true};
  return NormalizedWrt{wrt, b2, false};
}

CycPoly sum_ep(std::int64_t a, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("sum_ep: p must be >= 1");
  CycNumber c = CycNumber::zero(2 * p);
  for (std::int64_t n = 0; n < p; ++n) c += CycNumber::zeta(2 * p, 2 * (2 * n + 1) * a);
  return cyc_monomial(u_vars(), c, {2 * a});
}

bool modified_dimension_reduces(std::int64_t p) {
  const CycPoly base = brace_symbolic(p, 0, p);
  for (std::int64_t n = 0; n < p; ++n) {
    if (!(brace_symbolic(p, 2 * p * n, p) == base)) return false;
  }
  return true;
}

CgpResult cgp_zero(const KnotSpec& k, std::int64_t p) {
  require_odd_p(p, "cgp_zero");
  require_double_twist(k, "cgp_zero");
  CycPoly total(u_vars(), CyclotomicRing{2 * p});
  for (std::int64_t m = 0; m < p; ++m) {
    const CycNumber a = a_at_root(k, m, p);
    if (!a.is_zero()) total += cgp_inner_sum(m, p).scaled(a.embed(2 * p));
  }
  return CgpResult{k, p, std::move(total), 0, false};
}

CgpResult cgp_from_ado(const KnotSpec& k, std::int64_t p) {
  require_odd_p(p, "cgp_from_ado");
  if (!modified_dimension_reduces(p)) {
    throw std::logic_error("cgp_from_ado: {p(lambda+2n)} depends on n for p=" + std::to_string(p));
  }
  return CgpResult{k, p, weighted_u_sum(ado(k, p).poly, p), 0, false};
}

InvariantReport verify_thm3(const KnotSpec& k, std::int64_t p, bool exploratory) {
  require_odd_p(p, "verify_thm3");
  const bool torus = k.family() != KnotSpec::Family::DoubleTwist;
  if (torus && !exploratory) {
    throw std::invalid_argument("verify_thm3: " + k.to_string() + " is only accepted in exploratory mode");
  }
  const CycPoly lhs = torus ? cgp_from_ado(k, p).numerator : cgp_zero(k, p).numerator;
  const std::int64_t order = 2 * p;
  const CycNumber one = CycNumber::one(order);
  const CycPoly shape = cyc_monomial(u_vars(), one, {2 * p}) + cyc_monomial(u_vars(), one, {-2 * p}) -
                        cyc_constant(u_vars(), CycNumber::from_integer(order, Integer(2)));
  const CycNumber tail = a_at_root(k, p - 1, p).embed(order) * Integer(p);
  const CycPoly rhs = cyc_constant(u_vars(), wrt_zero(k, p)) + shape.scaled(tail);
  InvariantReport r;
  r.identity = "thm3";
  r.params = {{"knot", k.to_string()}, {"p", p}};
  r.pass = lhs == rhs;
  r.lhs = to_json(lhs);
  r.rhs = to_json(rhs);
  r.exploratory = torus;
  if (torus) r.note = "torus knot: reported only, not asserted";
  return r;
}

}  // namespace cycloknot
