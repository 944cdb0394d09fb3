#include "cycloknot/suites.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <stdexcept>
#include <thread>

#include "cycloknot/ado.hpp"
#include "cycloknot/habiro.hpp"
#include "cycloknot/jones.hpp"
#include "cycloknot/qtools.hpp"
#include "cycloknot/ring_maps.hpp"
#include "cycloknot/serialize.hpp"
#include "cycloknot/torus.hpp"
#include "cycloknot/wrt_cgp.hpp"

namespace cycloknot {

namespace {

using nlohmann::json;
using Grid = std::vector<std::int64_t>;

struct Job {
  std::string identity;
  json params;
  std::function<InvariantReport()> run;
};

// Records the first mismatching pair, or the last pair compared when all agree.
class Witness {
 public:
  template <class T>
  bool compare(const T& lhs, const T& rhs, json where = json::object()) {
    const bool ok = lhs == rhs;
    if (pass_ || !ok) {
      if (pass_) {
        lhs_ = to_json(lhs);
        rhs_ = to_json(rhs);
        where_ = std::move(where);
      }
      if (!ok) pass_ = false;
    }
    return ok;
  }

  void fail(const std::string& why) {
    if (pass_) note_ = why;
    pass_ = false;
  }

  InvariantReport report(const std::string& identity, json params) const {
    InvariantReport r;
    r.identity = identity;
    r.params = std::move(params);
    if (!where_.empty()) r.params["at"] = where_;
    r.pass = pass_;
    r.lhs = lhs_;
    r.rhs = rhs_;
    r.note = note_;
    return r;
  }

 private:
  bool pass_ = true;
  json lhs_, rhs_, where_;
  std::string note_;
};

const std::vector<KnotSpec>& double_twist_test_set() {
  static const std::vector<KnotSpec> v{KnotSpec::double_twist(1, 1), KnotSpec::double_twist(-1, 1),
                                       KnotSpec::double_twist(2, 1), KnotSpec::double_twist(2, -2),
                                       KnotSpec::double_twist(2, 2)};
  return v;
}

bool is_double_twist(const KnotSpec& k) { return k.family() == KnotSpec::Family::DoubleTwist; }
bool is_plain_torus(const KnotSpec& k) { return !is_double_twist(k) && !k.is_mirror(); }

class SuiteBuilder {
 public:
  explicit SuiteBuilder(const SuiteOptions& o) : opt_(o) {}

  std::vector<KnotSpec> knots(const std::vector<KnotSpec>& defaults,
                              const std::function<bool(const KnotSpec&)>& accepts) const {
    if (!opt_.knot) return defaults;
    if (accepts(*opt_.knot)) return {*opt_.knot};
    return {};
  }

  Grid ps(const Grid& full, const Grid& quick, const std::function<bool(std::int64_t)>& accepts) const {
    if (opt_.p) return accepts(*opt_.p) ? Grid{*opt_.p} : Grid{};
    return opt_.quick ? quick : full;
  }

  // Torus parameters t, filtered by a --knot of the form t2:t.
  Grid ts(const Grid& full, const Grid& quick) const {
    if (opt_.knot) {
      if (!is_plain_torus(*opt_.knot)) return {};
      const Grid& g = opt_.quick ? quick : full;
      const std::int64_t t = opt_.knot->t();
      return std::find(g.begin(), g.end(), t) != g.end() ? Grid{t} : Grid{};
    }
    return opt_.quick ? quick : full;
  }

  std::int64_t pick(std::int64_t full, std::int64_t quick) const { return opt_.quick ? quick : full; }

  bool keeps_unparameterized() const { return !opt_.knot; }
  const SuiteOptions& options() const { return opt_; }

  void add(std::string identity, json params, std::function<InvariantReport()> run) {
    jobs_.push_back(Job{std::move(identity), std::move(params), std::move(run)});
  }
  std::vector<Job> take() { return std::move(jobs_); }

 private:
  const SuiteOptions& opt_;
  std::vector<Job> jobs_;
};

bool odd_prime_at_least_3(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

// --- thm1-trunc ------------------------------------------------------------

void thm1_trunc(SuiteBuilder& b) {
  const std::int64_t top = b.pick(20, 10);
  const std::vector<KnotSpec> golden_set{KnotSpec::double_twist(1, 1), KnotSpec::double_twist(-1, 1)};
  for (const auto& k : b.knots(golden_set, [&](const KnotSpec& x) {
         return std::find(golden_set.begin(), golden_set.end(), x) != golden_set.end();
       })) {
    b.add("habiro-golden", {{"knot", k.to_string()}, {"m_max", top}}, [k, top] {
      Witness w;
      const bool trefoil = k == KnotSpec::double_twist(1, 1);
      for (std::int64_t m = 0; m <= top; ++m) {
        const Integer sign = (trefoil && m % 2 != 0) ? Integer(-1) : Integer(1);
        const IntPoly expected = trefoil ? int_monomial(q_vars(), {m * (m + 3) / 2}, sign)
                                         : int_constant(q_vars(), Integer(1));
        w.compare(habiro_a(k, m), expected, {{"m", m}});
      }
      return w.report("habiro-golden", {{"knot", k.to_string()}, {"m_max", top}});
    });
  }

  std::vector<KnotSpec> inversion_set{KnotSpec::double_twist(1, 1), KnotSpec::double_twist(-1, 1),
                                      KnotSpec::double_twist(2, 1), KnotSpec::double_twist(2, -2),
                                      KnotSpec::mirror(KnotSpec::torus(2))};
  const std::int64_t n_max = b.pick(6, 4);
  for (const auto& k : b.knots(inversion_set, [](const KnotSpec&) { return true; })) {
    b.add("inversion", {{"knot", k.to_string()}, {"n_max", n_max}}, [k, n_max] {
      // Torus-family inputs come from the hypergeometric sum, which describes T(2, 2t+1).
      std::vector<IntPoly> evals;
      for (std::int64_t l = 1; l <= n_max + 1; ++l) {
        if (is_double_twist(k)) {
          evals.push_back(colored_jones(k, l));
        } else {
          IntPoly j = colored_jones_hyper_t2(k.t(), l);
          evals.push_back(k.is_mirror() ? invert_variable(j, "q") : j);
        }
      }
      Witness w;
      for (std::int64_t n = 0; n <= n_max; ++n) {
        try {
          w.compare(habiro_from_jones(evals, n), habiro_c(k, n), {{"n", n}});
        } catch (const std::domain_error& e) {
          w.fail(e.what());
        }
      }
      return w.report("inversion", {{"knot", k.to_string()}, {"n_max", n_max}});
    });
  }

  const auto dt = b.knots(double_twist_test_set(), is_double_twist);
  const std::int64_t kmax_trunc = 3;
  for (const auto& k : dt) {
    for (auto p : b.ps({2, 3, 5}, {2, 3}, [](std::int64_t p) { return p >= 1; })) {
      json params{{"knot", k.to_string()}, {"p", p}, {"K_max", kmax_trunc}};
      b.add("truncation", params, [k, p, params] {
        Witness w;
        const CycPoly head = sigma_sum(k, p, p);
        for (std::int64_t kk = 1; kk <= kmax_trunc; ++kk) {
          w.compare(sigma_sum(k, p, kk * p), head * alexander_inverse_truncation(k, p, kk), {{"K", kk}});
        }
        return w.report("truncation", params);
      });
    }
    for (auto p : b.ps({1, 2, 3, 5}, {1, 2, 3}, [](std::int64_t p) { return p >= 1; })) {
      json params{{"knot", k.to_string()}, {"p", p}, {"k_max", 4}};
      b.add("alexander-inverse", params, [k, p, params] {
        Witness w;
        w.compare(alexander_inverse_residual(k, p, 4), CycPoly(Variables{"z"}, CyclotomicRing{p}));
        return w.report("alexander-inverse", params);
      });
    }
  }
}

// --- thm2 --------------------------------------------------------------------

void thm2(SuiteBuilder& b) {
  for (const auto& k : b.knots(double_twist_test_set(), is_double_twist)) {
    for (auto p : b.ps({2, 3, 5}, {2, 3}, [](std::int64_t p) { return p >= 1; })) {
      json params{{"knot", k.to_string()}, {"p", p}, {"k_max", 3}};
      b.add("periodicity", params, [k, p, params] {
        Witness w;
        for (std::int64_t n = 0; n < p; ++n) {
          for (std::int64_t kk = 0; kk <= 3; ++kk) {
            w.compare(a_at_root(k, n + kk * p, p), a_at_root(k, n, p) * a_at_one(k, kk), {{"n", n}, {"k", kk}});
          }
        }
        return w.report("periodicity", params);
      });
    }
  }
  if (b.options().p && *b.options().p != 2) return;
  std::vector<KnotSpec> p2 = double_twist_test_set();
  for (std::int64_t t = 1; t <= 4; ++t) p2.push_back(KnotSpec::torus(t));
  for (const auto& k : b.knots(p2, [](const KnotSpec&) { return true; })) {
    json params{{"knot", k.to_string()}, {"p", 2}};
    b.add("ado-p2", params, [k, params] {
      Witness w;
      const CycPoly delta_minus_x = substitute(alexander(k), "x", MonomialImage{2, 1, "x", 2}, 2);
      w.compare(ado(k, 2).poly, delta_minus_x);
      return w.report("ado-p2", params);
    });
  }
}

// --- thm3 --------------------------------------------------------------------

void thm3(SuiteBuilder& b) {
  const auto odd = [](std::int64_t p) { return p >= 3 && p % 2 == 1; };
  for (const auto& k : b.knots(double_twist_test_set(), is_double_twist)) {
    for (auto p : b.ps({3, 5, 7}, {3, 5}, odd)) {
      b.add("thm3", {{"knot", k.to_string()}, {"p", p}}, [k, p] { return verify_thm3(k, p); });
    }
  }
  if (!b.options().exploratory) return;
  for (const auto& k : b.knots({KnotSpec::torus(1), KnotSpec::torus(2)}, is_plain_torus)) {
    for (auto p : b.ps({3, 5, 7}, {3, 5}, odd)) {
      b.add("thm3", {{"knot", k.to_string()}, {"p", p}}, [k, p] { return verify_thm3(k, p, true); });
    }
  }
}

// --- thm4-vs-conj --------------------------------------------------------------

void thm4_vs_conj(SuiteBuilder& b) {
  for (auto t : b.ts({1, 2, 3}, {1, 2})) {
    for (auto p : b.ps({2, 3, 5}, {2, 3}, [](std::int64_t p) { return p >= 1; })) {
      json params{{"s", 2}, {"t", 2 * t + 1}, {"p", p}};
      b.add("thm4-vs-conj", params, [t, p, params] {
        Witness w;
        try {
          const AdoPoly conj = ado_conjectural(2, 2 * t + 1, p);
          const CycPoly proved = embed_coeffs(ado(KnotSpec::torus(t), p).poly, conj.poly.ring().order);
          if (!w.compare(proved, conj.poly)) w.fail("conjecture counterexample");
        } catch (const ConjectureViolation& e) {
          w.fail(std::string("conjecture counterexample: ") + e.what());
        }
        return w.report("thm4-vs-conj", params);
      });
    }
  }
  if (b.options().p) return;
  const std::int64_t n_max = b.pick(8, 6);
  for (auto t : b.ts({1, 2}, {1, 2})) {
    json params{{"knot", KnotSpec::torus(t).to_string()}, {"N_max", n_max}};
    b.add("jones-routes", params, [t, n_max, params] {
      Witness w;
      std::vector<IntPoly> hyper;
      for (std::int64_t n = 1; n <= n_max; ++n) {
        hyper.push_back(colored_jones_hyper_t2(t, n));
        const IntPoly habiro = colored_jones(KnotSpec::torus(t), n);
        w.compare(habiro, hyper.back(), {{"N", n}, {"route", "habiro-vs-hyper"}});
        if (n >= 3) {
          const IntPoly zero(q_vars());
          const auto& prev = hyper[static_cast<std::size_t>(n - 3)];
          w.compare(torus_recurrence_residual(2, 2 * t + 1, n, hyper.back(), prev), zero,
                    {{"N", n}, {"route", "recurrence-hyper"}});
          w.compare(torus_recurrence_residual(2, 2 * t + 1, n, habiro, colored_jones(KnotSpec::torus(t), n - 2)),
                    zero, {{"N", n}, {"route", "recurrence-habiro"}});
        }
      }
      return w.report("jones-routes", params);
    });
  }
}

// --- wrt-consistency -----------------------------------------------------------

void wrt_consistency(SuiteBuilder& b) {
  const auto odd = [](std::int64_t p) { return p >= 3 && p % 2 == 1; };
  for (const auto& k : b.knots(double_twist_test_set(), is_double_twist)) {
    for (auto p : b.ps({3, 5, 7}, {3, 5}, odd)) {
      json params{{"knot", k.to_string()}, {"p", p}};
      b.add("wrt-routes", params, [k, p, params] {
        Witness w;
        const CycNumber direct = wrt_zero(k, p);
        w.compare(direct, wrt_zero_closed(k, p), {{"route", "closed"}});
        w.compare(direct, wrt_zero_sigma_route(k, p), {{"route", "sigma"}});
        return w.report("wrt-routes", params);
      });
      b.add("cgp-routes", params, [k, p, params] {
        Witness w;
        const CycPoly n = cgp_zero(k, p).numerator;
        w.compare(n, cgp_from_ado(k, p).numerator, {{"route", "ado"}});
        CycNumber at_one = CycNumber::zero(2 * p);
        for (const auto& term : n.terms()) at_one += term.coeff;
        w.compare(at_one, wrt_zero(k, p), {{"route", "u=1"}});
        return w.report("cgp-routes", params);
      });
    }
    if (!b.options().p || *b.options().p == 3) {
      json params{{"knot", k.to_string()}, {"p", 3}};
      b.add("wrt-p3", params, [k, params] {
        Witness w;
        const CycNumber expected = CycNumber::from_integer(6, Integer(-6));
        w.compare(a_at_root(k, 0, 3), CycNumber::one(3), {{"value", "a_0"}});
        w.compare(wrt_zero(k, 3), expected, {{"route", "direct"}});
        w.compare(wrt_zero_closed(k, 3), expected, {{"route", "closed"}});
        return w.report("wrt-p3", params);
      });
    }
  }
  if (!b.keeps_unparameterized()) return;
  for (auto p : b.ps({3, 5, 7}, {3, 5}, odd)) {
    b.add("wrt-middle-vanishing", {{"p", p}}, [p] {
      Witness w;
      for (std::int64_t m = (p - 1) / 2; m < p - 1; ++m) {
        w.compare(wrt_inner_sum(m, p), CycNumber::zero(2 * p), {{"m", m}});
      }
      return w.report("wrt-middle-vanishing", {{"p", p}});
    });
    b.add("sum-ep", {{"p", p}}, [p] {
      Witness w;
      for (std::int64_t a = -p; a <= p; ++a) {
        CycPoly expected(u_vars(), CyclotomicRing{2 * p});
        if (a == 0 || a == p || a == -p) {
          expected = cyc_monomial(u_vars(), CycNumber::from_integer(2 * p, Integer(p)), {2 * a});
        }
        w.compare(sum_ep(a, p), expected, {{"a", a}});
      }
      return w.report("sum-ep", {{"p", p}});
    });
    b.add("modified-dimension", {{"p", p}}, [p] {
      Witness w;
      const CycNumber one = CycNumber::one(2 * p);
      const CycPoly expected = cyc_monomial(u_vars(), one, {p}) - cyc_monomial(u_vars(), one, {-p});
      for (std::int64_t n = 0; n < p; ++n) w.compare(brace_symbolic(p, 2 * p * n, p), expected, {{"n", n}});
      if (!modified_dimension_reduces(p)) w.fail("modified_dimension_reduces returned false");
      return w.report("modified-dimension", {{"p", p}});
    });
  }
}

// --- torus-T -------------------------------------------------------------------

void torus_t(SuiteBuilder& b) {
  const auto odd = [](std::int64_t p) { return p >= 3 && p % 2 == 1; };
  for (auto t : b.ts({1, 2}, {1, 2})) {
    for (auto p : b.ps({3, 5}, {3}, odd)) {
      json params{{"t", t}, {"p", p}};
      b.add("torus-T", params, [t, p] { return verify_T_claim(t, p); });
      b.add("torus-T-normalized", params, [t, p] { return verify_T_claim_normalized(t, p); });
      b.add("torus-wrt-routes", params, [t, p, params] {
        Witness w;
        const CycNumber direct = wrt_torus_direct(t, p);
        w.compare(direct, wrt_torus_odd_sum(t, p), {{"route", "odd-n sum"}});
        w.compare(direct, wrt_torus_from_jones(t, p), {{"route", "colored Jones"}});
        return w.report("torus-wrt-routes", params);
      });
      b.add("torus-cgp-routes", params, [t, p, params] {
        Witness w;
        const CgpResult c = cgp_torus_direct(t, p);
        w.compare(cgp_torus_ado_route(t, p), c.numerator.shifted(Exponent{2 * c.u_prefactor, 0}));
        return w.report("torus-cgp-routes", params);
      });
    }
  }
}

// --- appendix-t25 ----------------------------------------------------------------

void appendix_t25(SuiteBuilder& b) {
  const KnotSpec k = KnotSpec::mirror(KnotSpec::torus(2));
  if (b.options().knot && !(*b.options().knot == k)) return;
  const std::int64_t m_max = b.pick(4, 2);
  for (auto p : b.ps({3, 5, 7}, {3, 5}, odd_prime_at_least_3)) {
    json params{{"knot", k.to_string()}, {"p", p}, {"m_max", m_max}};
    b.add("t25-a_mp-split", params, [k, p, m_max, params] {
      Witness w;
      const CycNumber two = CycNumber::from_integer(p, Integer(2));
      const CycNumber ap_closed = t25::a_p(p);
      const CycNumber ap_direct = a_at_root(k, p, p);
      for (std::int64_t m = 0; m <= m_max; ++m) {
        const CycNumber lhs = a_at_root(k, m * p, p);
        const CycNumber closed = CycNumber::from_integer(p, t25::a_minus_one_closed(m)) +
                                 (two + ap_closed) * t25::a_one_closed(m);
        const Integer a_2m_minus_one = *eval_at_root(habiro_a(k, 2 * m), 2, 1).as_integer();
        const Integer a_m1_one = m == 0 ? Integer(0) : a_at_one(k, m - 1);
        const CycNumber direct = CycNumber::from_integer(p, a_2m_minus_one) + (two + ap_direct) * a_m1_one;
        w.compare(lhs, closed, {{"m", m}, {"rhs", "closed forms"}});
        w.compare(lhs, direct, {{"m", m}, {"rhs", "direct values"}});
        w.compare(lhs, t25::a_mp(m, p), {{"m", m}, {"rhs", "double sum"}});
      }
      return w.report("t25-a_mp-split", params);
    });
    b.add("t25-a_p", {{"knot", k.to_string()}, {"p", p}}, [k, p] {
      Witness w;
      w.compare(t25::a_p(p), a_at_root(k, p, p));
      if (p == 3) w.compare(t25::a_p(3), CycNumber::from_integer(3, Integer(-3)), {{"value", -3}});
      return w.report("t25-a_p", {{"knot", k.to_string()}, {"p", p}});
    });
  }
  if (b.options().p) return;
  b.add("t25-a-one", {{"knot", k.to_string()}}, [k] {
    Witness w;
    for (std::int64_t n = 1; n <= 8; ++n) w.compare(t25::a_one_closed(n), a_at_one(k, n - 1), {{"n", n}});
    return w.report("t25-a-one", {{"knot", k.to_string()}});
  });
  b.add("t25-a-minus-one", {{"knot", k.to_string()}}, [k] {
    Witness w;
    for (std::int64_t m = 0; m <= 6; ++m) {
      w.compare(t25::a_minus_one_closed(m), *eval_at_root(habiro_a(k, 2 * m), 2, 1).as_integer(), {{"m", m}});
    }
    return w.report("t25-a-minus-one", {{"knot", k.to_string()}});
  });
}

// --- qtools-identities -------------------------------------------------------------

void qtools_identities(SuiteBuilder& b) {
  if (!b.keeps_unparameterized()) return;
  for (auto p : b.ps({2, 3, 5, 7}, {2, 3, 5}, [](std::int64_t p) { return p >= 2; })) {
    b.add("qbinom-lucas", {{"p", p}}, [p] {
      Witness w;
      for (std::int64_t n = 0; n < p; ++n) {
        for (std::int64_t k = 0; k < p; ++k) {
          const CycNumber base = qbinomial_at_root_direct(n, k, p);
          for (std::int64_t a = 0; a <= 3; ++a) {
            for (std::int64_t bb = 0; bb <= 3; ++bb) {
              const CycNumber direct = qbinomial_at_root_direct(n + a * p, k + bb * p, p);
              json at{{"n", n}, {"k", k}, {"a", a}, {"b", bb}};
              w.compare(direct, base * binomial(a, bb), at);
              w.compare(direct, qbinomial_at_root(n + a * p, k + bb * p, p), at);
            }
          }
        }
      }
      return w.report("qbinom-lucas", {{"p", p}});
    });
    b.add("sigma-p", {{"p", p}}, [p] {
      Witness w;
      const CycNumber one = CycNumber::one(p);
      const CycPoly sp = cyc_monomial(x_vars(), one, {p}) + cyc_monomial(x_vars(), one, {-p}) -
                         cyc_constant(x_vars(), CycNumber::from_integer(p, Integer(2)));
      w.compare(sigma_at_root(p, p), sp, {{"m", p}});
      for (std::int64_t n = 0; n < p; ++n) {
        for (std::int64_t k = 1; k <= 3; ++k) {
          w.compare(sigma_at_root(n + k * p, p), sigma_at_root(n, p) * sp.pow(static_cast<unsigned>(k)),
                    {{"n", n}, {"k", k}});
        }
      }
      return w.report("sigma-p", {{"p", p}});
    });
    b.add("brace-p", {{"p", p}}, [p] {
      Witness w;
      w.compare(brace(p, p), CycNumber::zero(2 * p), {{"j", p}});
      w.compare(brace(0, p), CycNumber::zero(2 * p), {{"j", 0}});
      const CycNumber one = CycNumber::one(2 * p);
      w.compare(brace_symbolic(p, 0, p), cyc_monomial(u_vars(), one, {p}) - cyc_monomial(u_vars(), one, {-p}),
                {{"symbolic", "p lambda"}});
      return w.report("brace-p", {{"p", p}});
    });
  }
  for (auto p : b.ps({2, 3, 5}, {2, 3}, [](std::int64_t p) { return p >= 2 && p <= 5; })) {
    b.add("andrews-root-unity", {{"p", p}}, [p] {
      Witness w;
      for (std::int64_t t = 1; t <= 3; ++t) {
        CycPoly geometric(x_vars(), CyclotomicRing{p});
        for (std::int64_t j = 0; j < t; ++j) geometric += cyc_monomial(x_vars(), CycNumber::one(p), {2 * p * j});
        for (std::int64_t m = 0; m < p; ++m) {
          w.compare(andrews_chain_sum(p + m, t, p), geometric * andrews_chain_sum(m, t, p), {{"t", t}, {"m", m}});
        }
      }
      return w.report("andrews-root-unity", {{"p", p}});
    });
  }
  for (auto p : b.ps({3, 5, 7}, {3, 5}, [](std::int64_t p) { return p >= 3 && p % 2 == 1; })) {
    b.add("qbinom-2p-1-p", {{"p", p}}, [p] {
      Witness w;
      const Integer sign = (p - 1) % 2 == 0 ? Integer(1) : Integer(-1);
      w.compare(symmetric_qbinomial_at_root(2 * p - 1, p, p), CycNumber::from_integer(2 * p, sign));
      return w.report("qbinom-2p-1-p", {{"p", p}});
    });
    b.add("qbinom-2p-1-p-literal", {{"p", p}}, [p] {
      Witness w;
      const Integer sign = (p - 1) % 2 == 0 ? Integer(1) : Integer(-1);
      w.compare(eval_at_root(qbinomial(2 * p - 1, p), 2 * p, 1), CycNumber::from_integer(2 * p, sign));
      InvariantReport r = w.report("qbinom-2p-1-p-literal", {{"p", p}});
      r.exploratory = true;
      r.note = "plain q-binomial at q = e_{2p}, reported only";
      return r;
    });
    b.add("bracket-monic", {{"p", p}}, [p] {
      Witness w;
      const Variables v{"v"};
      const std::int64_t order = 2 * p;
      const CycNumber one = CycNumber::one(order);
      const CycPoly wv = cyc_monomial(v, one, {2}) + cyc_monomial(v, one, {-2});
      for (std::int64_t m = 0; m <= p - 1; ++m) {
        try {
          const auto coeffs = w_basis(bracket_poly(m, p));
          w.compare(static_cast<std::int64_t>(coeffs.size()) - 1, m + 1, {{"m", m}, {"check", "degree"}});
        } catch (const std::exception& e) {
          w.fail(e.what());
        }
      }
      for (std::int64_t i = 1; i < p; ++i) {
        const CycPoly plus = cyc_monomial(v, CycNumber::zeta(order, i), {1}) - cyc_monomial(v, CycNumber::zeta(order, -i), {-1});
        const CycPoly minus = cyc_monomial(v, CycNumber::zeta(order, -i), {1}) - cyc_monomial(v, CycNumber::zeta(order, i), {-1});
        const CycNumber c = (CycNumber::zeta(p, i) + CycNumber::zeta(p, -i)).embed(order);
        w.compare(plus * minus, wv - cyc_constant(v, c), {{"i", i}, {"check", "sigma factor"}});
      }
      return w.report("bracket-monic", {{"p", p}});
    });
  }
  if (b.options().p) return;
  const std::int64_t n_max = b.pick(12, 8);
  b.add("pochhammer-sigma", {{"n_max", n_max}}, [n_max] {
    Witness w;
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const IntPoly rhs = sigma(n).shifted(Exponent{0, n * (n + 1)}).scaled(n % 2 == 0 ? Integer(1) : Integer(-1));
      w.compare(pochhammer_pair(n), rhs, {{"n", n}});
    }
    return w.report("pochhammer-sigma", {{"n_max", n_max}});
  });
  b.add("sigma-symmetry", {{"m_max", n_max}}, [n_max] {
    Witness w;
    for (std::int64_t m = 0; m <= n_max; ++m) {
      const IntPoly s = sigma(m);
      w.compare(invert_variable(s, "x"), s, {{"m", m}, {"swap", "x"}});
      w.compare(invert_variable(s, "q"), s, {{"m", m}, {"swap", "q"}});
    }
    return w.report("sigma-symmetry", {{"m_max", n_max}});
  });
}

using SuiteFn = void (*)(SuiteBuilder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"thm1-trunc", thm1_trunc},         {"thm2", thm2},
      {"thm3", thm3},                     {"thm4-vs-conj", thm4_vs_conj},
      {"wrt-consistency", wrt_consistency}, {"torus-T", torus_t},
      {"appendix-t25", appendix_t25},     {"qtools-identities", qtools_identities}};
  return r;
}

InvariantReport run_guarded(const Job& job) {
  try {
    return job.run();
  } catch (const std::exception& e) {
    InvariantReport r;
    r.identity = job.identity;
    r.params = job.params;
    r.pass = false;
    r.note = std::string("exception: ") + e.what();
    return r;
  }
}

std::vector<InvariantReport> execute(const std::vector<Job>& jobs, unsigned max_parallel) {
  unsigned width = max_parallel ? max_parallel : std::max(1U, std::thread::hardware_concurrency());
  std::vector<InvariantReport> out;
  out.reserve(jobs.size());
  for (std::size_t start = 0; start < jobs.size(); start += width) {
    const std::size_t stop = std::min(jobs.size(), start + width);
    std::vector<std::future<InvariantReport>> batch;
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, run_guarded, std::cref(jobs[i])));
    }
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

}  // namespace

bool SuiteRun::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const InvariantReport& r) { return r.pass || r.exploratory; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<SuiteRun> run_suites(const std::string& name, const SuiteOptions& options) {
  std::vector<SuiteRun> runs;
  bool found = false;
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    found = true;
    SuiteBuilder builder(options);
    fn(builder);
    runs.push_back(SuiteRun{suite, execute(builder.take(), options.max_parallel)});
  }
  if (!found) {
    std::string list;
    for (const auto& s : suite_names()) list += (list.empty() ? "" : ", ") + s;
    throw std::invalid_argument("unknown suite '" + name + "'; expected all or one of: " + list);
  }
  return runs;
}

}  // namespace cycloknot
