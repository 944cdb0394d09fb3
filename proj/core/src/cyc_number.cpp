#include "cycloknot/cyc_number.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cycloknot {

namespace detail {

struct CycContext {
  std::int64_t order = 1;
  std::int64_t phi = 1;
  std::vector<Integer> modulus;                  // Phi_m, degree phi, monic
  std::vector<std::vector<Integer>> zeta_powers;  // reduced zeta^k, k = 0..order-1
};

namespace {

// Reduce a dense coefficient vector modulo the monic polynomial `mod` in place,
// truncating to deg(mod) entries.
void reduce_in_place(std::vector<Integer>& v, const std::vector<Integer>& mod) {
  const std::size_t phi = mod.size() - 1;
  for (std::size_t d = v.size(); d-- > phi;) {
    if (v[d].is_zero()) continue;
    const Integer c = v[d];
    const std::size_t shift = d - phi;
    for (std::size_t i = 0; i < phi; ++i) {
      if (!mod[i].is_zero()) v[shift + i] -= c * mod[i];
    }
    v[d] = Integer(0);
  }
  v.resize(phi);
}

std::vector<Integer> compute_cyclotomic(std::int64_t m) {
  // t^m - 1
  std::vector<Integer> num(static_cast<std::size_t>(m) + 1, Integer(0));
  num[0] = Integer(-1);
  num[static_cast<std::size_t>(m)] = Integer(1);
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& den = cyclotomic_coefficients(d);
    // Exact division by a monic polynomial, from the top.
    const std::size_t dd = den.size() - 1;
    std::vector<Integer> quot(num.size() - dd, Integer(0));
    for (std::size_t k = num.size(); k-- > dd;) {
      const Integer c = num[k];
      quot[k - dd] = c;
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    for (std::size_t i = 0; i < dd; ++i) {
      if (!num[i].is_zero()) {
        throw std::logic_error("cyclotomic_polynomial: inexact division for m=" +
                               std::to_string(m));
      }
    }
    num = std::move(quot);
  }
  return num;
}

std::shared_ptr<const CycContext> build_context(std::int64_t m) {
  auto ctx = std::make_shared<CycContext>();
  ctx->order = m;
  ctx->modulus = cyclotomic_coefficients(m);
  ctx->phi = static_cast<std::int64_t>(ctx->modulus.size()) - 1;
  ctx->zeta_powers.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) {
    std::vector<Integer> v(static_cast<std::size_t>(std::max(k + 1, ctx->phi)), Integer(0));
    v[static_cast<std::size_t>(k)] = Integer(1);
    reduce_in_place(v, ctx->modulus);
    ctx->zeta_powers.push_back(std::move(v));
  }
  return ctx;
}

}  // namespace

std::shared_ptr<const CycContext> cyc_context(std::int64_t order) {
  if (order < 1) throw std::invalid_argument("cyclotomic ring order must be >= 1");
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const CycContext>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  auto ctx = build_context(order);
  std::lock_guard lock(mu);
  return cache.emplace(order, std::move(ctx)).first->second;
}

}  // namespace detail

std::int64_t totient(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("totient: m must be >= 1");
  std::int64_t result = m, n = m;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_coefficients(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // Computed outside the lock: recursion re-enters for the divisors of m.
  std::vector<Integer> phi = m == 1 ? std::vector<Integer>{Integer(-1), Integer(1)}
                                    : detail::compute_cyclotomic(m);
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(phi)).first->second;
}

CycNumber::CycNumber() : CycNumber(zero(1)) {}

CycNumber CycNumber::zero(std::int64_t order) {
  auto ctx = detail::cyc_context(order);
  std::vector<Integer> c(static_cast<std::size_t>(ctx->phi), Integer(0));
  return CycNumber(std::move(ctx), std::move(c));
}

CycNumber CycNumber::one(std::int64_t order) { return from_integer(order, Integer(1)); }

CycNumber CycNumber::from_integer(std::int64_t order, const Integer& v) {
  CycNumber r = zero(order);
  r.coeffs_[0] = v;
  return r;
}

CycNumber CycNumber::zeta(std::int64_t order, std::int64_t k) {
  auto ctx = detail::cyc_context(order);
  const std::int64_t e = ((k % order) + order) % order;
  std::vector<Integer> c = ctx->zeta_powers[static_cast<std::size_t>(e)];
  return CycNumber(std::move(ctx), std::move(c));
}

CycNumber CycNumber::from_coeffs(std::int64_t order, std::vector<Integer> coeffs) {
  auto ctx = detail::cyc_context(order);
  if (coeffs.size() < static_cast<std::size_t>(ctx->phi)) {
    coeffs.resize(static_cast<std::size_t>(ctx->phi), Integer(0));
  }
  detail::reduce_in_place(coeffs, ctx->modulus);
  return CycNumber(std::move(ctx), std::move(coeffs));
}

std::int64_t CycNumber::order() const { return ctx_->order; }
std::int64_t CycNumber::degree() const { return ctx_->phi; }

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<Integer> CycNumber::as_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return std::nullopt;
  }
  return coeffs_[0];
}

void CycNumber::require_same_order(const CycNumber& b, const char* op) const {
  if (order() != b.order()) {
    throw std::invalid_argument(std::string("CycNumber ") + op + ": order mismatch (" +
                                std::to_string(order()) + " vs " + std::to_string(b.order()) +
                                ")");
  }
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& b) {
  require_same_order(b, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& b) {
  require_same_order(b, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
  CycNumber r = a;
  r += b;
  return r;
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) {
  CycNumber r = a;
  r -= b;
  return r;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  a.require_same_order(b, "mul");
  const std::size_t phi = a.coeffs_.size();
  if (phi == 1) return CycNumber(a.ctx_, {a.coeffs_[0] * b.coeffs_[0]});
  std::vector<Integer> prod(2 * phi - 1, Integer(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (!b.coeffs_[j].is_zero()) prod[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
    }
  }
  detail::reduce_in_place(prod, a.ctx_->modulus);
  return CycNumber(a.ctx_, std::move(prod));
}

CycNumber operator*(const CycNumber& a, const Integer& s) {
  CycNumber r = a;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

CycNumber CycNumber::pow(std::uint64_t e) const {
  CycNumber result = one(order()), base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

CycNumber CycNumber::embed(std::int64_t m) const {
  if (m < 1 || m % order() != 0) {
    throw std::invalid_argument("CycNumber::embed: order " + std::to_string(order()) +
                                " does not divide " + std::to_string(m));
  }
  const std::int64_t scale = m / order();
  auto ctx = detail::cyc_context(m);
  std::vector<Integer> acc(static_cast<std::size_t>(m), Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    acc[static_cast<std::size_t>((static_cast<std::int64_t>(i) * scale) % m)] += coeffs_[i];
  }
  return from_coeffs(m, std::move(acc));
}

CycNumber CycNumber::galois(std::int64_t j) const {
  const std::int64_t m = order();
  if (std::gcd(((j % m) + m) % m, m) != 1) {
    throw std::invalid_argument("CycNumber::galois: exponent " + std::to_string(j) +
                                " is not a unit mod " + std::to_string(m));
  }
  std::vector<Integer> acc(static_cast<std::size_t>(m), Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t e = (((static_cast<std::int64_t>(i) * j) % m) + m) % m;
    acc[static_cast<std::size_t>(e)] += coeffs_[i];
  }
  return from_coeffs(m, std::move(acc));
}

Integer CycNumber::norm() const {
  const std::int64_t m = order();
  CycNumber prod = *this;
  for (std::int64_t j = 2; j < m; ++j) {
    if (std::gcd(j, m) == 1) prod *= galois(j);
  }
  auto n = prod.as_integer();
  if (!n) throw std::logic_error("CycNumber::norm: product of conjugates is not rational");
  return *n;
}

CycNumber CycNumber::divexact(const Integer& d) const {
  CycNumber r = *this;
  for (auto& c : r.coeffs_) c = c.divexact(d);
  return r;
}

std::optional<CycNumber> CycNumber::divide(const CycNumber& b) const {
  require_same_order(b, "divide");
  if (b.is_zero()) return std::nullopt;
  const std::int64_t m = order();
  // a / b = a * prod_{j != 1} sigma_j(b) / N(b)
  CycNumber cofactor = one(m);
  for (std::int64_t j = 2; j < m; ++j) {
    if (std::gcd(j, m) == 1) cofactor *= b.galois(j);
  }
  const auto n = (b * cofactor).as_integer();
  if (!n) throw std::logic_error("CycNumber::divide: product of conjugates is not rational");
  CycNumber num = *this * cofactor;
  for (const auto& c : num.coeffs_) {
    if (!c.divisible_by(*n)) return std::nullopt;
  }
  return num.divexact(*n);
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

}  // namespace cycloknot
