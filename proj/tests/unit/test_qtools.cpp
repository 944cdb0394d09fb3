#include <gtest/gtest.h>

#include <set>

#include "cycloknot/qtools.hpp"
#include "cycloknot/ring_maps.hpp"

using namespace cycloknot;

namespace {

IntPoly q(std::initializer_list<std::pair<std::int64_t, std::int64_t>> t) { return int_poly("q", t); }
CycNumber num(std::int64_t m, std::int64_t v) { return CycNumber::from_integer(m, Integer(v)); }

// Pascal recursion [n;k] = [n-1;k-1] + q^k [n-1;k], kept separate from the library cache.
IntPoly pascal(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return IntPoly(q_vars());
  if (k == 0 || k == n) return q({{0, 1}});
  return pascal(n - 1, k - 1) + pascal(n - 1, k).shifted(Exponent{2 * k, 0});
}

}  // namespace

TEST(QInteger, Examples) {
  EXPECT_TRUE(qint(0).is_zero());
  EXPECT_EQ(qint(1), q({{0, 1}}));
  EXPECT_EQ(qint(3), q({{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(qfactorial(3), q({{0, 1}, {1, 1}}) * q({{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(qfactorial(0), q({{0, 1}}));
}

TEST(QBinomial, Examples) {
  EXPECT_EQ(qbinomial(7, 0), q({{0, 1}}));
  EXPECT_EQ(qbinomial(2, 1), q({{0, 1}, {1, 1}}));
  EXPECT_EQ(qbinomial(4, 2), q({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
  EXPECT_TRUE(qbinomial(3, 5).is_zero());
}

TEST(QBinomial, MatchesPascalOracle) {
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      EXPECT_EQ(qbinomial(n, k), pascal(n, k)) << n << "," << k;
      EXPECT_EQ(qbinomial(n, k), qbinomial(n, n - k));
      EXPECT_EQ(eval_at_one(qbinomial(n, k)), binomial(n, k));
    }
  }
}

TEST(QBinomial, AtRootExamples) {
  EXPECT_EQ(qbinomial_at_root_direct(5, 3, 2), num(2, 2));
  EXPECT_EQ(qbinomial_at_root(5, 3, 2), num(2, 2));
  for (std::int64_t p : {3, 5, 7}) {
    for (std::int64_t k = 1; k < p; ++k) {
      EXPECT_TRUE(qbinomial_at_root_direct(p, k, p).is_zero());
      EXPECT_TRUE(qbinomial_at_root(p, k, p).is_zero());
    }
  }
}

TEST(QBinomial, LucasFullGrid) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t n = 0; n < p; ++n) {
      for (std::int64_t k = 0; k < p; ++k) {
        for (std::int64_t a = 0; a <= 3; ++a) {
          for (std::int64_t b = 0; b <= 3; ++b) {
            EXPECT_EQ(qbinomial_at_root_direct(n + a * p, k + b * p, p),
                      qbinomial_at_root_direct(n, k, p) * binomial(a, b));
          }
        }
      }
    }
  }
}

TEST(QBinomial, SymmetricAtDoubleOrder) {
  for (std::int64_t p : {3, 5, 7}) {
    const Integer sign = (p - 1) % 2 == 0 ? Integer(1) : Integer(-1);
    EXPECT_EQ(symmetric_qbinomial_at_root(2 * p - 1, p, p), num(2 * p, 1) * sign);
  }
}

TEST(Pochhammer, PairExamples) {
  EXPECT_EQ(pochhammer_pair(0), int_constant(xq_vars(), Integer(1)));
  const IntPoly one = int_constant(xq_vars(), Integer(1));
  const IntPoly expected = one - int_monomial(xq_vars(), {1, 1}) - int_monomial(xq_vars(), {-1, 1}) +
                           int_monomial(xq_vars(), {0, 2});
  EXPECT_EQ(pochhammer_pair(1), expected);
  EXPECT_EQ(pochhammer_pair(2), sigma(2).shifted(Exponent{0, 6}));
  EXPECT_EQ(qpochhammer(1, 3), q({{0, 1}, {1, -1}}) * q({{0, 1}, {2, -1}}) * q({{0, 1}, {3, -1}}));
}

TEST(Pochhammer, SigmaRelation) {
  for (std::int64_t n = 0; n <= 12; ++n) {
    const Integer sign = n % 2 == 0 ? Integer(1) : Integer(-1);
    EXPECT_EQ(pochhammer_pair(n), sigma(n).shifted(Exponent{0, n * (n + 1)}).scaled(sign)) << n;
  }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(0), int_constant(xq_vars(), Integer(1)));
  const IntPoly s1 = int_monomial(xq_vars(), {1, 0}) + int_monomial(xq_vars(), {-1, 0}) -
                     int_monomial(xq_vars(), {0, 1}) - int_monomial(xq_vars(), {0, -1});
  EXPECT_EQ(sigma(1), s1);
  EXPECT_EQ(sigma(3), sigma(2) * (int_monomial(xq_vars(), {1, 0}) + int_monomial(xq_vars(), {-1, 0}) -
                                  int_monomial(xq_vars(), {0, 3}) - int_monomial(xq_vars(), {0, -3})));
}

TEST(Sigma, Symmetry) {
  for (std::int64_t m = 0; m <= 12; ++m) {
    EXPECT_EQ(invert_variable(sigma(m), "x"), sigma(m));
    EXPECT_EQ(invert_variable(sigma(m), "q"), sigma(m));
  }
}

TEST(Sigma, AtRootPeriodicity) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    const CycNumber one = CycNumber::one(p);
    const CycPoly sp = cyc_monomial(x_vars(), one, {p}) + cyc_monomial(x_vars(), one, {-p}) -
                       cyc_constant(x_vars(), num(p, 2));
    EXPECT_EQ(sigma_at_root(p, p), sp);
    for (std::int64_t n = 0; n < p; ++n) {
      for (std::int64_t k = 0; k <= 3; ++k) {
        EXPECT_EQ(sigma_at_root(n + k * p, p), sigma_at_root(n, p) * sp.pow(static_cast<unsigned>(k)));
      }
    }
  }
}

TEST(Sigma, AtRootAgreesWithGenericSigma) {
  for (std::int64_t p : {3, 5}) {
    for (std::int64_t m = 0; m <= 6; ++m) {
      EXPECT_EQ(sigma_at_root(m, p), substitute(sigma(m), "q", MonomialImage{p, 1, "", 0}, p));
    }
  }
}

TEST(Brace, Values) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    EXPECT_TRUE(brace(0, p).is_zero());
    EXPECT_TRUE(brace(p, p).is_zero());
    EXPECT_EQ(brace(1, p), CycNumber::zeta(2 * p, 1) - CycNumber::zeta(2 * p, -1));
    EXPECT_EQ(brace(-3, p), -brace(3, p));
    const CycNumber one = CycNumber::one(2 * p);
    EXPECT_EQ(brace_symbolic(p, 0, p), cyc_monomial(u_vars(), one, {p}) - cyc_monomial(u_vars(), one, {-p}));
  }
}

TEST(BracketPoly, MonicInW) {
  const Variables v{"v"};
  for (std::int64_t p : {3, 5, 7}) {
    const CycNumber one = CycNumber::one(2 * p);
    const CycPoly w2 = cyc_monomial(v, one, {2}) + cyc_monomial(v, one, {-2}) - cyc_constant(v, num(2 * p, 2));
    EXPECT_EQ(bracket_poly(0, p), w2);
    for (std::int64_t m = 0; m < p; ++m) {
      const auto c = w_basis(bracket_poly(m, p));
      ASSERT_EQ(c.size(), static_cast<std::size_t>(m + 2)) << p << "," << m;
      EXPECT_EQ(c.back(), CycNumber::one(2 * p));
    }
  }
}

TEST(BracketPoly, SigmaFactorIdentity) {
  const Variables v{"v"};
  for (std::int64_t p : {3, 5, 7}) {
    const std::int64_t m = 2 * p;
    const CycNumber one = CycNumber::one(m);
    for (std::int64_t i = 0; i < p; ++i) {
      const CycPoly plus = cyc_monomial(v, CycNumber::zeta(m, i), {1}) - cyc_monomial(v, CycNumber::zeta(m, -i), {-1});
      const CycPoly minus = cyc_monomial(v, CycNumber::zeta(m, -i), {1}) - cyc_monomial(v, CycNumber::zeta(m, i), {-1});
      const CycPoly rhs = cyc_monomial(v, one, {2}) + cyc_monomial(v, one, {-2}) -
                          cyc_constant(v, (CycNumber::zeta(p, i) + CycNumber::zeta(p, -i)).embed(m));
      EXPECT_EQ(plus * minus, rhs);
    }
  }
}

TEST(Chains, CountsAndOrderIndependence) {
  // Nondecreasing chains of given length ending at top: C(top + len - 1, len - 1).
  for (std::int64_t top = 0; top <= 6; ++top) {
    for (std::int64_t len = 1; len <= 4; ++len) {
      std::set<std::vector<std::int64_t>> lex, rev;
      std::int64_t count = 0;
      for_each_chain(top, len, 0, [&](std::span<const std::int64_t> c) {
        ++count;
        EXPECT_EQ(c.size(), static_cast<std::size_t>(len));
        EXPECT_EQ(c.back(), top);
        for (std::size_t i = 0; i + 1 < c.size(); ++i) EXPECT_LE(c[i], c[i + 1]);
        lex.insert({c.begin(), c.end()});
      }, ChainOrder::Lexicographic);
      for_each_chain(top, len, 0, [&](std::span<const std::int64_t> c) { rev.insert({c.begin(), c.end()}); },
                     ChainOrder::ReverseLexicographic);
      EXPECT_EQ(count, binomial(top + len - 1, len - 1).to_int64());
      EXPECT_EQ(lex, rev);
    }
  }
}

TEST(Andrews, RootOfUnityFactorization) {
  for (std::int64_t p : {2, 3, 5}) {
    for (std::int64_t t = 1; t <= 3; ++t) {
      CycPoly geometric(x_vars(), CyclotomicRing{p});
      for (std::int64_t j = 0; j < t; ++j) geometric += cyc_monomial(x_vars(), CycNumber::one(p), {2 * p * j});
      for (std::int64_t m = 0; m < p; ++m) {
        EXPECT_EQ(andrews_chain_sum(p + m, t, p), geometric * andrews_chain_sum(m, t, p)) << p << " " << t << " " << m;
      }
    }
  }
}

TEST(QTools, Errors) {
  EXPECT_THROW(qint(-1), std::invalid_argument);
  EXPECT_THROW(sigma(-1), std::invalid_argument);
  EXPECT_THROW(bracket_poly(3, 3), std::invalid_argument);
  EXPECT_THROW(brace(1, 0), std::invalid_argument);
}
