#include "cycloknot/qtools.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cycloknot/ring_maps.hpp"

namespace cycloknot {

const Variables& q_vars() {
  static const Variables v{"q"};
  return v;
}
const Variables& xq_vars() {
  static const Variables v{"x", "q"};
  return v;
}
const Variables& x_vars() {
  static const Variables v{"x"};
  return v;
}
const Variables& u_vars() {
  static const Variables v{"u"};
  return v;
}

namespace {

void require_nonnegative(std::int64_t n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": argument must be >= 0");
}

IntPoly q_one() { return int_constant(q_vars(), Integer(1)); }

IntPoly q_mono(std::int64_t e, std::int64_t c = 1) { return int_monomial(q_vars(), {e}, Integer(c)); }

}  // namespace

IntPoly qint(std::int64_t n) {
  require_nonnegative(n, "qint");
  std::vector<IntPoly::Term> t;
  for (std::int64_t i = 0; i < n; ++i) t.push_back({Exponent{2 * i, 0}, Integer(1)});
  return IntPoly::from_terms(q_vars(), {}, std::move(t));
}

IntPoly qfactorial(std::int64_t n) {
  require_nonnegative(n, "qfactorial");
  IntPoly r = q_one();
  for (std::int64_t j = 2; j <= n; ++j) r *= qint(j);
  return r;
}

const IntPoly& qbinomial(std::int64_t n, std::int64_t k) {
  require_nonnegative(n, "qbinomial");
  static const IntPoly zero(q_vars());
  if (k < 0 || k > n) return zero;
  static std::mutex mu;
  static std::deque<std::vector<IntPoly>> rows;  // deque keeps element addresses stable
  std::lock_guard lock(mu);
  if (rows.empty()) rows.push_back({q_one()});
  while (static_cast<std::int64_t>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const std::int64_t m = static_cast<std::int64_t>(rows.size());
    std::vector<IntPoly> row;
    row.reserve(static_cast<std::size_t>(m) + 1);
    row.push_back(q_one());
    for (std::int64_t j = 1; j < m; ++j) {
      row.push_back(prev[static_cast<std::size_t>(j - 1)] +
                    prev[static_cast<std::size_t>(j)].shifted(Exponent{2 * j, 0}));
    }
    row.push_back(q_one());
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

IntPoly qpochhammer(std::int64_t a, std::int64_t n) {
  require_nonnegative(n, "qpochhammer");
  IntPoly r = q_one();
  for (std::int64_t i = 0; i < n; ++i) r *= q_one() - q_mono(a + i);
  return r;
}

IntPoly pochhammer_pair(std::int64_t n) {
  require_nonnegative(n, "pochhammer_pair");
  const IntPoly one = int_constant(xq_vars(), Integer(1));
  IntPoly r = one;
  for (std::int64_t i = 0; i < n; ++i) {
    r *= one - int_monomial(xq_vars(), {1, i + 1});
    r *= one - int_monomial(xq_vars(), {-1, i + 1});
  }
  return r;
}

IntPoly sigma(std::int64_t m) {
  require_nonnegative(m, "sigma");
  const IntPoly x_part = int_monomial(xq_vars(), {1, 0}) + int_monomial(xq_vars(), {-1, 0});
  IntPoly r = int_constant(xq_vars(), Integer(1));
  for (std::int64_t i = 1; i <= m; ++i) {
    r *= x_part - int_monomial(xq_vars(), {0, i}) - int_monomial(xq_vars(), {0, -i});
  }
  return r;
}

CycPoly sigma_at_root(std::int64_t m, std::int64_t p) {
  require_nonnegative(m, "sigma_at_root");
  if (p < 1) throw std::invalid_argument("sigma_at_root: p must be >= 1");
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, CycPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({m, p}); it != cache.end()) return it->second;
  }
  const CycPoly x_part = cyc_monomial(x_vars(), CycNumber::one(p), {1}) +
                         cyc_monomial(x_vars(), CycNumber::one(p), {-1});
  CycPoly r = cyc_constant(x_vars(), CycNumber::one(p));
  for (std::int64_t i = 1; i <= m; ++i) {
    r *= x_part - cyc_constant(x_vars(), CycNumber::zeta(p, i) + CycNumber::zeta(p, -i));
  }
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(m, p), std::move(r)).first->second;
}

CycNumber qbinomial_at_root_direct(std::int64_t n, std::int64_t k, std::int64_t m,
                                   std::int64_t r) {
  return eval_at_root(qbinomial(n, k), m, r);
}

CycNumber qbinomial_at_root(std::int64_t n, std::int64_t k, std::int64_t m, std::int64_t r) {
  require_nonnegative(n, "qbinomial_at_root");
  if (m < 1) throw std::invalid_argument("qbinomial_at_root: root order must be >= 1");
  if (k < 0 || k > n) return CycNumber::zero(m);
  if (std::gcd(((r % m) + m) % m, m) != 1) return qbinomial_at_root_direct(n, k, m, r);
  const std::int64_t n0 = n % m, k0 = k % m;
  const Integer lucas = binomial(n / m, k / m);
  if (k0 > n0 || lucas.is_zero()) return CycNumber::zero(m);
  return eval_at_root(qbinomial(n0, k0), m, r) * lucas;
}

CycNumber symmetric_qbinomial_at_root(std::int64_t n, std::int64_t k, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("symmetric_qbinomial_at_root: p must be >= 1");
  if (k < 0 || k > n) return CycNumber::zero(2 * p);
  return qbinomial_at_root(n, k, p).embed(2 * p) * CycNumber::zeta(2 * p, -k * (n - k));
}

CycNumber brace(std::int64_t j, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("brace: p must be >= 1");
  return CycNumber::zeta(2 * p, j) - CycNumber::zeta(2 * p, -j);
}

CycPoly brace_symbolic(std::int64_t c, std::int64_t j, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("brace_symbolic: p must be >= 1");
  return cyc_monomial(u_vars(), CycNumber::zeta(2 * p, j), {c}) -
         cyc_monomial(u_vars(), CycNumber::zeta(2 * p, -j), {-c});
}

std::vector<CycNumber> w_basis(const CycPoly& f) {
  if (f.vars().size() != 1) throw std::domain_error("w_basis: univariate input required");
  const std::int64_t order = f.ring().order;
  const Variables& vars = f.vars();
  std::vector<CycNumber> coeffs;
  if (f.is_zero()) return coeffs;
  const std::int64_t top = f.max_exponent(0);
  // w^d has top doubled exponent 4d.
  if (top < 0 || top % 4 != 0) throw std::domain_error("w_basis: not a polynomial in v^2 + v^-2");
  const std::int64_t degree = top / 4;
  const CycPoly w = cyc_monomial(vars, CycNumber::one(order), {2}) +
                    cyc_monomial(vars, CycNumber::one(order), {-2});
  std::vector<CycPoly> powers{cyc_constant(vars, CycNumber::one(order))};
  for (std::int64_t d = 1; d <= degree; ++d) powers.push_back(powers.back() * w);
  coeffs.assign(static_cast<std::size_t>(degree) + 1, CycNumber::zero(order));
  CycPoly rest = f;
  for (std::int64_t d = degree; d >= 0 && !rest.is_zero(); --d) {
    const CycNumber c = rest.coefficient(Exponent{4 * d, 0});
    coeffs[static_cast<std::size_t>(d)] = c;
    rest -= powers[static_cast<std::size_t>(d)] * c;
    if (!rest.is_zero() && rest.max_exponent(0) >= 4 * d) {
      throw std::domain_error("w_basis: not a polynomial in v^2 + v^-2");
    }
  }
  if (!rest.is_zero()) throw std::domain_error("w_basis: not a polynomial in v^2 + v^-2");
  return coeffs;
}

CycPoly bracket_poly(std::int64_t m, std::int64_t p) {
  if (p < 1 || m < 0 || m > p - 1) {
    throw std::invalid_argument("bracket_poly: need 0 <= m <= p-1");
  }
  const Variables v{"v"};
  const std::int64_t order = 2 * p;
  auto shifted_brace = [&](std::int64_t j) {
    return cyc_monomial(v, CycNumber::zeta(order, j), {1}) -
           cyc_monomial(v, CycNumber::zeta(order, -j), {-1});
  };
  CycPoly b = shifted_brace(0) * shifted_brace(0);
  for (std::int64_t j = 1; j <= m; ++j) b = b * shifted_brace(j) * shifted_brace(-j);
  const auto coeffs = w_basis(b);
  if (static_cast<std::int64_t>(coeffs.size()) != m + 2 || !(coeffs.back() == CycNumber::one(order))) {
    throw std::logic_error("bracket_poly: expected a monic polynomial of degree " +
                           std::to_string(m + 1) + " in w");
  }
  return b;
}

void for_each_chain(std::int64_t top, std::int64_t length, std::int64_t lower,
                    const std::function<void(std::span<const std::int64_t>)>& visit,
                    ChainOrder order) {
  if (length < 1) throw std::invalid_argument("for_each_chain: length must be >= 1");
  if (top < lower) return;
  std::vector<std::int64_t> chain(static_cast<std::size_t>(length), top);
  // Fill positions 0..length-2 recursively, each bounded by its predecessor and top.
  std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t pos, std::int64_t floor) {
    if (pos + 1 == chain.size()) {
      visit(chain);
      return;
    }
    if (order == ChainOrder::Lexicographic) {
      for (std::int64_t c = floor; c <= top; ++c) {
        chain[pos] = c;
        fill(pos + 1, c);
      }
    } else {
      for (std::int64_t c = top; c >= floor; --c) {
        chain[pos] = c;
        fill(pos + 1, c);
      }
    }
  };
  fill(0, lower);
}

CycPoly andrews_chain_sum(std::int64_t top, std::int64_t t, std::int64_t p) {
  if (t < 1 || p < 1 || top < 0) throw std::invalid_argument("andrews_chain_sum: bad arguments");
  CycPoly total(x_vars(), CyclotomicRing{p});
  for_each_chain(top, t, 0, [&](std::span<const std::int64_t> k) {
    CycNumber c = CycNumber::one(p);
    std::int64_t x_exp = 0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      c *= CycNumber::zeta(p, k[i] * (k[i] + 1)) * qbinomial_at_root(k[i + 1], k[i], p);
      x_exp += 2 * k[i];
    }
    if (!c.is_zero()) total += cyc_monomial(x_vars(), c, {x_exp});
  });
  return total;
}

}  // namespace cycloknot
