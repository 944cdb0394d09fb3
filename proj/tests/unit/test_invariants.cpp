#include <gtest/gtest.h>

#include "cycloknot/ado.hpp"
#include "cycloknot/habiro.hpp"
#include "cycloknot/jones.hpp"
#include "cycloknot/qtools.hpp"
#include "cycloknot/ring_maps.hpp"
#include "cycloknot/torus.hpp"
#include "cycloknot/wrt_cgp.hpp"

using namespace cycloknot;

namespace {

const KnotSpec trefoil = KnotSpec::double_twist(1, 1);
const KnotSpec figure8 = KnotSpec::double_twist(-1, 1);

const std::vector<KnotSpec>& test_knots() {
  static const std::vector<KnotSpec> v{trefoil, figure8, KnotSpec::double_twist(2, 1), KnotSpec::double_twist(2, -2),
                                       KnotSpec::double_twist(2, 2)};
  return v;
}

IntPoly q(std::initializer_list<std::pair<std::int64_t, std::int64_t>> t) { return int_poly("q", t); }
CycNumber num(std::int64_t m, std::int64_t v) { return CycNumber::from_integer(m, Integer(v)); }
CycNumber z(std::int64_t m, std::int64_t k) { return CycNumber::zeta(m, k); }

}  // namespace

// Jones polynomials from standard knot tables, V(t) with t = q.
TEST(ColoredJones, KnotTableAtN2) {
  EXPECT_EQ(colored_jones(trefoil, 2), q({{1, 1}, {3, 1}, {4, -1}}));
  EXPECT_EQ(colored_jones(figure8, 2), q({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}));
  EXPECT_EQ(colored_jones(KnotSpec::double_twist(2, 1), 2), q({{1, 1}, {2, -1}, {3, 2}, {4, -1}, {5, 1}, {6, -1}}));
  EXPECT_EQ(colored_jones(KnotSpec::double_twist(2, 2), 2),
            q({{1, 1}, {2, -2}, {3, 3}, {4, -2}, {5, 3}, {6, -2}, {7, 1}, {8, -1}}));
  EXPECT_EQ(colored_jones(KnotSpec::double_twist(2, -2), 2),
            q({{-4, 1}, {-3, -1}, {-2, 2}, {-1, -3}, {0, 3}, {1, -3}, {2, 2}, {3, -1}, {4, 1}}));
  // 5_1 in the table convention is the mirror of T(2,5) here.
  EXPECT_EQ(invert_variable(colored_jones(KnotSpec::torus(2), 2), "q"), q({{2, 1}, {4, 1}, {5, -1}, {6, 1}, {7, -1}}));
}

TEST(ColoredJones, Normalization) {
  for (const auto& k : test_knots()) EXPECT_EQ(colored_jones(k, 1), q({{0, 1}}));
  EXPECT_EQ(colored_jones_hyper_t2(1, 1), q({{0, 1}}));
  EXPECT_EQ(colored_jones_hyper_t2(3, 1), q({{0, 1}}));
  EXPECT_THROW(colored_jones(trefoil, 0), std::invalid_argument);
}

TEST(ColoredJones, HabiroMatchesHypergeometric) {
  for (std::int64_t t = 1; t <= 2; ++t) {
    for (std::int64_t n = 1; n <= 8; ++n) {
      EXPECT_EQ(colored_jones(KnotSpec::torus(t), n), colored_jones_hyper_t2(t, n)) << t << " " << n;
    }
  }
  for (std::int64_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(colored_jones(KnotSpec::torus(3), n), colored_jones_hyper_t2(3, n));
    EXPECT_EQ(colored_jones(trefoil, n), invert_variable(colored_jones_hyper_t2(1, n), "q"));
  }
}

TEST(ColoredJones, Recurrence) {
  for (std::int64_t t = 1; t <= 2; ++t) {
    for (std::int64_t n = 3; n <= 8; ++n) {
      const IntPoly jn = colored_jones(KnotSpec::torus(t), n);
      const IntPoly jm = colored_jones(KnotSpec::torus(t), n - 2);
      EXPECT_TRUE(torus_recurrence_residual(2, 2 * t + 1, n, jn, jm).is_zero());
      EXPECT_TRUE(check_torus_recurrence(2, 2 * t + 1, n, jn, jm));
      EXPECT_FALSE(check_torus_recurrence(2, 2 * t + 1, n, jn + q({{0, 1}}), jm));
    }
  }
  EXPECT_TRUE(check_torus_recurrence(2, 5, 4, colored_jones_hyper_t2(2, 4), colored_jones_hyper_t2(2, 2)));
}

TEST(Ado, SmallCases) {
  for (const auto& k : test_knots()) {
    EXPECT_EQ(ado(k, 1).poly, cyc_constant(x_vars(), CycNumber::one(1)));
  }
  const CycNumber one = CycNumber::one(2);
  EXPECT_EQ(ado(trefoil, 2).poly, -cyc_monomial(x_vars(), one, {1}) - cyc_constant(x_vars(), one) -
                                      cyc_monomial(x_vars(), one, {-1}));
}

TEST(Ado, AlexanderAtP2) {
  std::vector<KnotSpec> ks = test_knots();
  for (std::int64_t t = 1; t <= 4; ++t) ks.push_back(KnotSpec::torus(t));
  for (const auto& k : ks) {
    EXPECT_EQ(ado(k, 2).poly, substitute(alexander(k), "x", MonomialImage{2, 1, "x", 2}, 2)) << k.to_string();
  }
}

TEST(Ado, MirrorIsGaloisConjugate) {
  for (const auto& k : {trefoil, KnotSpec::double_twist(2, 1), KnotSpec::torus(1)}) {
    for (std::int64_t p : {3, 5}) {
      EXPECT_EQ(ado(KnotSpec::mirror(k), p).poly, galois_coeffs(ado(k, p).poly, -1));
    }
  }
}

TEST(Ado, TruncationFactorization) {
  for (const auto& k : test_knots()) {
    for (std::int64_t p : {2, 3, 5}) {
      const CycPoly head = sigma_sum(k, p, p);
      EXPECT_EQ(head, ado(k, p).poly);
      for (std::int64_t kk = 1; kk <= 3; ++kk) {
        EXPECT_EQ(sigma_sum(k, p, kk * p), head * alexander_inverse_truncation(k, p, kk));
      }
    }
  }
}

TEST(Ado, AlexanderInverse) {
  for (const auto& k : test_knots()) {
    for (std::int64_t p : {1, 2, 3, 5}) EXPECT_TRUE(alexander_inverse_residual(k, p, 4).is_zero());
  }
}

TEST(Ado, PeriodicityFailsWithoutThePattern) {
  // The torus closed form has no periodicity of this kind.
  const KnotSpec m5 = KnotSpec::mirror(KnotSpec::torus(2));
  bool all = true;
  for (std::int64_t n = 0; n < 3; ++n) {
    for (std::int64_t kk = 0; kk <= 2; ++kk) all = all && a_at_root(m5, n + 3 * kk, 3) == a_at_root(m5, n, 3) * a_at_one(m5, kk);
  }
  EXPECT_FALSE(all);
}

TEST(Ado, Chi) {
  for (std::int64_t l = 0; l < 12; ++l) {
    const int c = chi(2, 3, l);
    if (l == 1 || l == 5 || l == 7 || l == 11) {
      EXPECT_TRUE(c == 1 || c == -1) << l;
    } else {
      EXPECT_EQ(c, 0) << l;
    }
    EXPECT_EQ(chi(2, 3, l), chi(2, 3, l + 12));
  }
  EXPECT_EQ(chi(2, 3, 1), -chi(2, 3, 5));
}

TEST(Ado, ConjecturalFormAgrees) {
  for (std::int64_t t = 1; t <= 3; ++t) {
    for (std::int64_t p : {2, 3, 5}) {
      const AdoPoly conj = ado_conjectural(2, 2 * t + 1, p);
      EXPECT_FALSE(conj.knot.has_value());
      EXPECT_EQ(embed_coeffs(ado(KnotSpec::torus(t), p).poly, conj.poly.ring().order), conj.poly) << t << " " << p;
    }
  }
}

TEST(Ado, ErrorPaths) {
  EXPECT_THROW(ado(trefoil, 0), std::invalid_argument);
  EXPECT_THROW(ado_conjectural(2, 4, 3), std::invalid_argument);
}

TEST(Wrt, RoutesAgree) {
  for (const auto& k : test_knots()) {
    for (std::int64_t p : {3, 5, 7}) {
      const CycNumber w = wrt_zero(k, p);
      EXPECT_EQ(w, wrt_zero_closed(k, p));
      EXPECT_EQ(w, wrt_zero_sigma_route(k, p));
    }
    EXPECT_EQ(wrt_zero(k, 3), num(6, -6));
  }
}

TEST(Wrt, FrozenValues) {
  EXPECT_EQ(wrt_zero(KnotSpec::double_twist(2, 1), 5), z(10, 1) * Integer(10) - num(10, 10));
  EXPECT_EQ(wrt_zero(trefoil, 5), z(10, 3) * Integer(-10));
  EXPECT_EQ(wrt_zero(figure8, 7), num(14, -14));
  const NormalizedWrt n3 = normalize_wrt(wrt_zero(trefoil, 3), 3);
  EXPECT_TRUE(n3.exact);
  EXPECT_EQ(n3.value, num(6, 2));
  EXPECT_EQ(n3.brace1_sq, num(6, -3));
}

TEST(Wrt, MiddleVanishing) {
  for (std::int64_t p : {3, 5, 7}) {
    for (std::int64_t m = (p - 1) / 2; m < p - 1; ++m) EXPECT_TRUE(wrt_inner_sum(m, p).is_zero());
    EXPECT_FALSE(wrt_inner_sum(0, p).is_zero());
  }
}

TEST(Wrt, ErrorPaths) {
  EXPECT_THROW(wrt_zero(trefoil, 4), std::invalid_argument);
  EXPECT_THROW(wrt_zero(trefoil, 1), std::invalid_argument);
}

TEST(Cgp, SumEp) {
  for (std::int64_t p : {3, 5, 7}) {
    for (std::int64_t a = -p; a <= p; ++a) {
      const CycPoly s = sum_ep(a, p);
      if (a == 0 || a == p || a == -p) {
        EXPECT_EQ(s, cyc_monomial(u_vars(), num(2 * p, p), {2 * a}));
      } else {
        EXPECT_TRUE(s.is_zero());
      }
    }
    EXPECT_TRUE(modified_dimension_reduces(p));
  }
}

TEST(Cgp, FigureEightAtP3) {
  const CycNumber one = CycNumber::one(6);
  const CycPoly expected = cyc_monomial(u_vars(), one * Integer(3), {6}) - cyc_constant(u_vars(), num(6, 12)) +
                           cyc_monomial(u_vars(), one * Integer(3), {-6});
  EXPECT_EQ(cgp_zero(figure8, 3).numerator, expected);
  EXPECT_EQ(cgp_zero(figure8, 3).u_prefactor, 0);
}

TEST(Cgp, RoutesAndThreeTermForm) {
  for (const auto& k : test_knots()) {
    for (std::int64_t p : {3, 5, 7}) {
      const CgpResult a = cgp_zero(k, p);
      EXPECT_EQ(a.numerator, cgp_from_ado(k, p).numerator);
      CycNumber at_one = CycNumber::zero(2 * p);
      for (const auto& t : a.numerator.terms()) at_one += t.coeff;
      EXPECT_EQ(at_one, wrt_zero(k, p));
      const InvariantReport r = verify_thm3(k, p);
      EXPECT_TRUE(r.pass) << r.to_json().dump();
      EXPECT_FALSE(r.exploratory);
    }
  }
  EXPECT_THROW(verify_thm3(KnotSpec::torus(2), 3), std::invalid_argument);
  EXPECT_TRUE(verify_thm3(KnotSpec::torus(2), 3, true).exploratory);
}

TEST(Torus, WrtRoutes) {
  for (std::int64_t t = 1; t <= 3; ++t) {
    for (std::int64_t p : {3, 5, 7}) {
      const CycNumber w = wrt_torus_direct(t, p);
      EXPECT_EQ(w, wrt_torus_odd_sum(t, p));
      EXPECT_EQ(w, wrt_torus_from_jones(t, p));
      EXPECT_EQ(w, wrt_zero(KnotSpec::torus(t), p));
    }
  }
}

TEST(Torus, CgpRoutes) {
  for (std::int64_t t = 1; t <= 2; ++t) {
    for (std::int64_t p : {3, 5}) {
      const CgpResult c = cgp_torus_direct(t, p);
      EXPECT_EQ(c.u_prefactor, 2 * (p - 1) * t);
      EXPECT_TRUE(c.one_plus_u_minus_2p);
      EXPECT_EQ(cgp_torus_ado_route(t, p), c.numerator.shifted(Exponent{2 * c.u_prefactor, 0}));
    }
  }
}

TEST(Torus, ExtractT) {
  const std::int64_t p = 3;
  const CycNumber one = CycNumber::one(2 * p);
  const Variables tv{"T"};
  const CycPoly f = cyc_monomial(u_vars(), one, {2 * p}) + cyc_constant(u_vars(), num(2 * p, 3)) +
                    cyc_monomial(u_vars(), one, {-2 * p});
  const TExtraction a = extract_T(f, p);
  EXPECT_EQ(a.residue, 0);
  EXPECT_EQ(a.g, cyc_monomial(tv, one, {1}) + cyc_constant(tv, num(2 * p, 3)) + cyc_monomial(tv, one, {-1}));
  const TExtraction b = extract_T(cyc_monomial(u_vars(), one, {2 * p + 1}) + cyc_monomial(u_vars(), one, {1}), p);
  EXPECT_EQ(b.residue, 1);
  EXPECT_EQ(b.g, cyc_monomial(tv, one, {1}) + cyc_constant(tv, one));
  try {
    extract_T(cyc_monomial(u_vars(), one, {1}) + cyc_monomial(u_vars(), one, {2}), p);
    FAIL();
  } catch (const MixedResidueError& e) {
    EXPECT_EQ(e.exponents(), std::vector<std::int64_t>{2});
  }
}

// The bare double sum carries residue 2t mod 2p; the u^{2(p-1)t} prefactor moves it to 0.
TEST(Torus, TClaimResidues) {
  const std::pair<std::int64_t, std::int64_t> grid[] = {{1, 3}, {1, 5}, {2, 3}};
  for (auto [t, p] : grid) {
    const TExtraction x = extract_T(cgp_torus_direct(t, p).numerator, p);
    EXPECT_EQ(x.residue, (2 * t) % (2 * p)) << t << " " << p;
    EXPECT_FALSE(verify_T_claim(t, p).pass);
    EXPECT_TRUE(verify_T_claim_normalized(t, p).pass);
  }
  // At (2, 5) both the double sum and the WRT value vanish.
  EXPECT_TRUE(cgp_torus_direct(2, 5).numerator.is_zero());
  EXPECT_TRUE(wrt_torus_direct(2, 5).is_zero());
  EXPECT_TRUE(verify_T_claim(2, 5).pass);
}
