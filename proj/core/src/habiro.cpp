#include "cycloknot/habiro.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "cycloknot/ring_maps.hpp"

namespace cycloknot {

namespace {

IntPoly q_monomial(std::int64_t e, const Integer& c = Integer(1)) {
  return int_monomial(q_vars(), {e}, c);
}

Integer sign_power(std::int64_t n) { return n % 2 == 0 ? Integer(1) : Integer(-1); }

// Chain sum over n = s_len >= ... >= s_1 >= 0 with weights
//   positive: prod q^{s_i(s_i+1)} [s_{i+1}; s_i]
//   negative: prod q^{-s_i(s_{i+1}+1)} [s_{i+1}; s_i]
IntPoly twist_chain_sum(std::int64_t len, std::int64_t n, bool negative, ChainOrder order) {
  IntPoly total(q_vars());
  for_each_chain(n, len, 0, [&](std::span<const std::int64_t> s) {
    std::int64_t e = 0;
    IntPoly term = int_constant(q_vars(), Integer(1));
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      e += negative ? -s[i] * (s[i + 1] + 1) : s[i] * (s[i] + 1);
      term *= qbinomial(s[i + 1], s[i]);
    }
    total += term.shifted(Exponent{2 * e, 0});
  }, order);
  return total;
}

IntPoly double_twist_a(std::int64_t l, std::int64_t m, std::int64_t n, ChainOrder order) {
  // Normalized: l <= m and m > 0.
  const Integer sign = sign_power(n);
  if (l > 0) {
    IntPoly c = twist_chain_sum(l, n, false, order) * twist_chain_sum(m, n, false, order);
    return c.shifted(Exponent{n * (n + 1) + 2 * n, 0}).scaled(sign);
  }
  // K(m, -|l|): C_n = (-1)^n q^{-n(n+1)/2} S * T, so a_n = S * T.
  return twist_chain_sum(m, n, false, order) * twist_chain_sum(-l, n, true, order);
}

IntPoly mirror_torus_a(std::int64_t t, std::int64_t n, ChainOrder order) {
  IntPoly total(q_vars());
  for_each_chain(n + 1, t, 1, [&](std::span<const std::int64_t> k) {
    std::int64_t e = 0;
    std::int64_t prefix = 0;  // sum_{j < i} k_j
    IntPoly term = int_constant(q_vars(), Integer(1));
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      const auto idx = static_cast<std::int64_t>(i) + 1;
      e += k[i] * k[i];
      term *= qbinomial(k[i + 1] + k[i] - idx + 2 * prefix, k[i + 1] - k[i]);
      prefix += k[i];
    }
    total += term.shifted(Exponent{2 * e, 0});
  }, order);
  // q^{n(n+1)/2 + n + 1 - t}, doubled.
  return total.shifted(Exponent{n * (n + 1) + 2 * (n + 1 - t), 0}).scaled(sign_power(n));
}

IntPoly compute_a(const KnotSpec& k, std::int64_t n, ChainOrder order) {
  if (n < 0) throw std::invalid_argument("habiro_a: n must be >= 0");
  IntPoly a(q_vars());
  bool invert = k.is_mirror();
  if (k.family() == KnotSpec::Family::DoubleTwist) {
    a = double_twist_a(k.l(), k.m(), n, order);
  } else {
    // The closed form describes the mirror of T(2, 2t+1).
    a = mirror_torus_a(k.t(), n, order);
    invert = !invert;
  }
  return invert ? invert_variable(a, "q") : a;
}

}  // namespace

IntPoly alexander(const KnotSpec& k) {
  const Variables& x = x_vars();
  if (k.family() == KnotSpec::Family::DoubleTwist) {
    const Integer lm = Integer(k.l()) * Integer(k.m());
    IntPoly z = int_monomial(x, {1}) + int_monomial(x, {-1}) - int_constant(x, Integer(2));
    return int_constant(x, Integer(1)) + z.scaled(lm);
  }
  const std::int64_t t = k.t();
  const IntPoly num = int_monomial(x, {-t}) + int_monomial(x, {t + 1});
  const IntPoly den = int_constant(x, Integer(1)) + int_monomial(x, {1});
  auto quot = divide_exact(num, den);
  if (!quot) throw std::logic_error("alexander: (1 + x^{2t+1}) not divisible by (1 + x)");
  return *quot;
}

const IntPoly& habiro_a(const KnotSpec& k, std::int64_t n) {
  using Key = std::tuple<KnotSpec::Family, std::int64_t, std::int64_t, bool, std::int64_t>;
  static std::mutex mu;
  static std::map<Key, IntPoly> cache;  // std::map nodes keep references stable
  const Key key{k.family(), k.l(), k.m(), k.is_mirror(), n};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  IntPoly a = compute_a(k, n, ChainOrder::Lexicographic);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(a)).first->second;
}

IntPoly habiro_a_enumerated(const KnotSpec& k, std::int64_t n, ChainOrder order) {
  return compute_a(k, n, order);
}

IntPoly habiro_c(const KnotSpec& k, std::int64_t n) {
  return habiro_a(k, n).shifted(Exponent{-n * (n + 1), 0}).scaled(sign_power(n));
}

IntPoly habiro_from_jones(std::span<const IntPoly> evals, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("habiro_from_jones: n must be >= 0");
  if (static_cast<std::int64_t>(evals.size()) < n + 1) {
    throw std::invalid_argument("habiro_from_jones: need J(q^l, q) for l = 1.." + std::to_string(n + 1));
  }
  const IntPoly one = int_constant(q_vars(), Integer(1));
  // 1/((q;q)_{n+1-l}(q;q)_{n+1+l}) = [2n+2; n+1-l] / (q;q)_{2n+2}
  IntPoly numerator(q_vars());
  for (std::int64_t l = 1; l <= n + 1; ++l) {
    const IntPoly& j = evals[static_cast<std::size_t>(l - 1)];
    if (!(j.vars() == q_vars())) throw std::invalid_argument("habiro_from_jones: evaluations must be in q");
    IntPoly term = (one - q_monomial(l)) * (one - q_monomial(2 * l)) * qbinomial(2 * n + 2, n + 1 - l);
    // l(l-3) is always even.
    term = term.shifted(Exponent{l * (l - 3), 0}).scaled(sign_power(l)) * j;
    numerator += term;
  }
  numerator = numerator.shifted(Exponent{2 * (n + 1), 0}).scaled(Integer(-1));
  auto c = divide_exact(numerator, qpochhammer(1, 2 * n + 2));
  if (!c) {
    throw std::domain_error("habiro_from_jones: inexact division by (q;q)_" + std::to_string(2 * n + 2) +
                            "; the colored Jones inputs are inconsistent");
  }
  return *c;
}

Integer a_at_one(const KnotSpec& k, std::int64_t n) { return eval_at_one(habiro_a(k, n)); }

CycNumber a_at_root(const KnotSpec& k, std::int64_t n, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("a_at_root: p must be >= 1");
  return eval_at_root(habiro_a(k, n), p, 1);
}

namespace t25 {

namespace {

void require_odd_prime(std::int64_t p) {
  bool prime = p >= 3 && p % 2 == 1;
  for (std::int64_t d = 3; prime && d * d <= p; d += 2) prime = p % d != 0;
  if (!prime) throw std::invalid_argument("t25: p must be an odd prime");
}

// sum_{j = floor(p/2)+1}^{p-1} e_p^{j^2} [j; 2j-1-p]_{e_p}
CycNumber tail_sum(std::int64_t p) {
  CycNumber s = CycNumber::zero(p);
  for (std::int64_t j = p / 2 + 1; j <= p - 1; ++j) {
    s += CycNumber::zeta(p, j * j) * qbinomial_at_root(j, 2 * j - 1 - p, p);
  }
  return s;
}

}  // namespace

CycNumber a_p(std::int64_t p) {
  require_odd_prime(p);
  return CycNumber::from_integer(p, Integer(-2)) - tail_sum(p) * CycNumber::zeta(p, -1);
}

CycNumber a_mp(std::int64_t m, std::int64_t p) {
  require_odd_prime(p);
  if (m < 0) throw std::invalid_argument("t25::a_mp: m must be >= 0");
  Integer even(1), odd(0);
  for (std::int64_t l = 0; l < m; ++l) {
    even += binomial(m + l, 2 * l);
    odd += binomial(m + l, 2 * l + 1);
  }
  CycNumber v = CycNumber::from_integer(p, even) + tail_sum(p) * CycNumber::zeta(p, -1) * odd;
  return v * sign_power(m);
}

Integer a_one_closed(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("t25::a_one_closed: n must be >= 0");
  Integer s(0);
  for (std::int64_t l = 0; l <= n; ++l) s += binomial(n + l, 2 * l + 1);
  return s * sign_power(n - 1);
}

Integer a_minus_one_closed(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("t25::a_minus_one_closed: m must be >= 0");
  Integer s(1);
  for (std::int64_t l = 0; l < m; ++l) s += binomial(m + l, 2 * l);
  return s * sign_power(m);
}

}  // namespace t25

}  // namespace cycloknot
