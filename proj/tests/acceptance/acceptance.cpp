// Twelve acceptance criteria, each an exact identity on a fixed grid.
// Prints one [PASS]/[FAIL] line per criterion; exits 1 if any fails.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cycloknot/ado.hpp"
#include "cycloknot/habiro.hpp"
#include "cycloknot/jones.hpp"
#include "cycloknot/qtools.hpp"
#include "cycloknot/ring_maps.hpp"
#include "cycloknot/torus.hpp"
#include "cycloknot/wrt_cgp.hpp"

using namespace cycloknot;

namespace {

std::vector<KnotSpec> dt_knots() {
  return {KnotSpec::double_twist(1, 1), KnotSpec::double_twist(-1, 1), KnotSpec::double_twist(2, 1),
          KnotSpec::double_twist(2, -2), KnotSpec::double_twist(2, 2)};
}

CycNumber num(std::int64_t m, std::int64_t v) { return CycNumber::from_integer(m, Integer(v)); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void check(bool ok, const std::string& where) {
    if (!ok && pass) detail = where;
    pass = pass && ok;
  }
};

Outcome habiro_goldens() {
  Outcome o;
  for (std::int64_t m = 0; m <= 20; ++m) {
    o.check(habiro_a(KnotSpec::double_twist(1, 1), m) ==
                int_monomial(q_vars(), {m * (m + 3) / 2}, m % 2 == 0 ? Integer(1) : Integer(-1)),
            "K(1,1) m=" + std::to_string(m));
    o.check(habiro_a(KnotSpec::double_twist(-1, 1), m) == int_constant(q_vars(), Integer(1)),
            "K(-1,1) m=" + std::to_string(m));
  }
  return o;
}

Outcome inversion_oracle() {
  Outcome o;
  std::vector<KnotSpec> ks{KnotSpec::double_twist(1, 1), KnotSpec::double_twist(-1, 1), KnotSpec::double_twist(2, 1),
                           KnotSpec::double_twist(2, -2), KnotSpec::mirror(KnotSpec::torus(2))};
  for (const auto& k : ks) {
    std::vector<IntPoly> evals;
    for (std::int64_t l = 1; l <= 7; ++l) {
      if (k.family() == KnotSpec::Family::DoubleTwist) {
        evals.push_back(colored_jones(k, l));
      } else {
        evals.push_back(invert_variable(colored_jones_hyper_t2(k.t(), l), "q"));
      }
    }
    for (std::int64_t n = 0; n <= 6; ++n) {
      o.check(habiro_from_jones(evals, n) == habiro_c(k, n), k.to_string() + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome periodicity() {
  Outcome o;
  for (const auto& k : dt_knots()) {
    for (std::int64_t p : {2, 3, 5}) {
      for (std::int64_t n = 0; n < p; ++n) {
        for (std::int64_t kk = 0; kk <= 3; ++kk) {
          o.check(a_at_root(k, n + kk * p, p) == a_at_root(k, n, p) * a_at_one(k, kk),
                  k.to_string() + " p=" + std::to_string(p));
        }
      }
    }
  }
  return o;
}

Outcome ado_at_two() {
  Outcome o;
  auto ks = dt_knots();
  for (std::int64_t t = 1; t <= 4; ++t) ks.push_back(KnotSpec::torus(t));
  for (const auto& k : ks) {
    o.check(ado(k, 2).poly == substitute(alexander(k), "x", MonomialImage{2, 1, "x", 2}, 2), k.to_string());
  }
  return o;
}

Outcome truncation() {
  Outcome o;
  for (const auto& k : dt_knots()) {
    for (std::int64_t p : {2, 3, 5}) {
      const CycPoly head = sigma_sum(k, p, p);
      for (std::int64_t kk = 1; kk <= 3; ++kk) {
        o.check(sigma_sum(k, p, kk * p) == head * alexander_inverse_truncation(k, p, kk),
                k.to_string() + " p=" + std::to_string(p) + " K=" + std::to_string(kk));
      }
    }
    for (std::int64_t p : {1, 2, 3, 5}) {
      o.check(alexander_inverse_residual(k, p, 4).is_zero(), k.to_string() + " inverse p=" + std::to_string(p));
    }
  }
  return o;
}

Outcome wrt_consistency() {
  Outcome o;
  for (const auto& k : dt_knots()) {
    for (std::int64_t p : {3, 5, 7}) {
      o.check(wrt_zero(k, p) == wrt_zero_closed(k, p), k.to_string() + " p=" + std::to_string(p));
    }
    o.check(a_at_root(k, 0, 3) == CycNumber::one(3), k.to_string() + " a_0");
    o.check(wrt_zero(k, 3) == num(6, -6), k.to_string() + " p=3 value");
  }
  return o;
}

Outcome three_term_cgp() {
  Outcome o;
  for (const auto& k : dt_knots()) {
    for (std::int64_t p : {3, 5, 7}) o.check(verify_thm3(k, p).pass, k.to_string() + " p=" + std::to_string(p));
  }
  return o;
}

Outcome torus_vs_conjecture() {
  Outcome o;
  for (std::int64_t t = 1; t <= 3; ++t) {
    for (std::int64_t p : {2, 3, 5}) {
      const std::string where = "t=" + std::to_string(t) + " p=" + std::to_string(p);
      try {
        const AdoPoly conj = ado_conjectural(2, 2 * t + 1, p);
        o.check(embed_coeffs(ado(KnotSpec::torus(t), p).poly, conj.poly.ring().order) == conj.poly,
                "conjecture counterexample at " + where);
      } catch (const ConjectureViolation& e) {
        o.check(false, "conjecture counterexample at " + where + ": " + e.what());
      }
    }
  }
  return o;
}

Outcome t_claim(bool normalized) {
  Outcome o;
  for (std::int64_t t = 1; t <= 2; ++t) {
    for (std::int64_t p : {3, 5}) {
      const InvariantReport r = normalized ? verify_T_claim_normalized(t, p) : verify_T_claim(t, p);
      o.check(r.pass, "t=" + std::to_string(t) + " p=" + std::to_string(p) + (r.note.empty() ? "" : ": " + r.note));
    }
  }
  return o;
}

Outcome appendix() {
  Outcome o;
  const KnotSpec k = KnotSpec::mirror(KnotSpec::torus(2));
  for (std::int64_t p : {3, 5, 7}) {
    const CycNumber two = num(p, 2);
    const CycNumber ap = a_at_root(k, p, p);
    o.check(ap == t25::a_p(p), "a_p p=" + std::to_string(p));
    for (std::int64_t m = 0; m <= 4; ++m) {
      const Integer a2m = *eval_at_root(habiro_a(k, 2 * m), 2, 1).as_integer();
      const Integer am1 = m == 0 ? Integer(0) : a_at_one(k, m - 1);
      const CycNumber rhs = CycNumber::from_integer(p, a2m) + (two + ap) * am1;
      o.check(a_at_root(k, m * p, p) == rhs, "p=" + std::to_string(p) + " m=" + std::to_string(m));
    }
  }
  o.check(t25::a_p(3) == num(3, -3), "closed a_3(e_3)");
  o.check(a_at_root(k, 3, 3) == num(3, -3), "direct a_3(e_3)");
  return o;
}

Outcome jones_routes() {
  Outcome o;
  for (std::int64_t t = 1; t <= 2; ++t) {
    const KnotSpec k = KnotSpec::torus(t);
    for (std::int64_t n = 1; n <= 8; ++n) {
      const IntPoly h = colored_jones(k, n);
      const IntPoly g = colored_jones_hyper_t2(t, n);
      o.check(h == g, k.to_string() + " N=" + std::to_string(n));
      if (n >= 3) {
        o.check(torus_recurrence_residual(2, 2 * t + 1, n, g, colored_jones_hyper_t2(t, n - 2)).is_zero(),
                k.to_string() + " residual N=" + std::to_string(n));
        o.check(torus_recurrence_residual(2, 2 * t + 1, n, h, colored_jones(k, n - 2)).is_zero(),
                k.to_string() + " habiro residual N=" + std::to_string(n));
      }
    }
  }
  return o;
}

Outcome qtools_identities() {
  Outcome o;
  for (std::int64_t p : {2, 3, 5, 7}) {
    const std::string P = " p=" + std::to_string(p);
    for (std::int64_t n = 0; n < p; ++n) {
      for (std::int64_t k = 0; k < p; ++k) {
        for (std::int64_t a = 0; a <= 3; ++a) {
          for (std::int64_t b = 0; b <= 3; ++b) {
            o.check(qbinomial_at_root_direct(n + a * p, k + b * p, p) == qbinomial_at_root_direct(n, k, p) * binomial(a, b),
                    "lucas" + P);
          }
        }
      }
    }
    const CycNumber one = CycNumber::one(p);
    const CycPoly sp = cyc_monomial(x_vars(), one, {p}) + cyc_monomial(x_vars(), one, {-p}) -
                       cyc_constant(x_vars(), num(p, 2));
    o.check(sigma_at_root(p, p) == sp, "sigma_p" + P);
    for (std::int64_t n = 0; n < p; ++n) {
      for (std::int64_t k = 1; k <= 3; ++k) {
        o.check(sigma_at_root(n + k * p, p) == sigma_at_root(n, p) * sp.pow(static_cast<unsigned>(k)), "sigma periodicity" + P);
      }
    }
    o.check(brace(p, p).is_zero(), "{p}=0" + P);
  }
  for (std::int64_t n = 0; n <= 12; ++n) {
    o.check(pochhammer_pair(n) == sigma(n).shifted(Exponent{0, n * (n + 1)}).scaled(n % 2 == 0 ? Integer(1) : Integer(-1)),
            "pochhammer n=" + std::to_string(n));
  }
  for (std::int64_t p : {2, 3, 5}) {
    for (std::int64_t t = 1; t <= 3; ++t) {
      CycPoly geometric(x_vars(), CyclotomicRing{p});
      for (std::int64_t j = 0; j < t; ++j) geometric += cyc_monomial(x_vars(), CycNumber::one(p), {2 * p * j});
      for (std::int64_t m = 0; m < p; ++m) {
        o.check(andrews_chain_sum(p + m, t, p) == geometric * andrews_chain_sum(m, t, p),
                "andrews p=" + std::to_string(p) + " t=" + std::to_string(t));
      }
    }
  }
  for (std::int64_t p : {3, 5, 7}) {
    const Integer sign = (p - 1) % 2 == 0 ? Integer(1) : Integer(-1);
    o.check(symmetric_qbinomial_at_root(2 * p - 1, p, p) == CycNumber::from_integer(2 * p, sign),
            "[2p-1;p] p=" + std::to_string(p));
    for (std::int64_t m = 0; m < p; ++m) {
      try {
        const auto c = w_basis(bracket_poly(m, p));
        o.check(c.size() == static_cast<std::size_t>(m + 2) && c.back() == CycNumber::one(2 * p),
                "bracket p=" + std::to_string(p) + " m=" + std::to_string(m));
      } catch (const std::exception& e) {
        o.check(false, std::string("bracket: ") + e.what());
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"habiro goldens", habiro_goldens},
      {"inversion oracle equivalence", inversion_oracle},
      {"periodicity at roots of unity", periodicity},
      {"ADO at p=2 equals Alexander(-x)", ado_at_two},
      {"sigma-sum truncation and Alexander inverse", truncation},
      {"WRT routes and the p=3 value", wrt_consistency},
      {"CGP numerator three-term form", three_term_cgp},
      {"torus ADO vs conjectural form", torus_vs_conjecture},
      {"torus double sum as a T-polynomial", [] { return t_claim(false); }},
      {"appendix identities", appendix},
      {"colored Jones routes", jones_routes},
      {"qtools identities", qtools_identities},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::printf("[%s] %2d %s%s\n", o.pass ? "PASS" : "FAIL", index++, name.c_str(),
                o.pass ? "" : ("  (first failure: " + o.detail + ")").c_str());
  }
  const Outcome normalized = t_claim(true);
  std::printf("[INFO]  9 with the u^{2(p-1)t} prefactor included: %s\n", normalized.pass ? "holds" : normalized.detail.c_str());
  return all ? 0 : 1;
}
